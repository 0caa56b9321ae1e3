#pragma once

#include <optional>

#include <nlohmann/json_fwd.hpp>

namespace tiercrawl {

/// Binary-classification counts; positive class is Deferred unless a
/// caller swaps it.
struct ConfusionMatrix {
  long tp = 0;
  long fn = 0;
  long fp = 0;
  long tn = 0;

  long total() const { return tp + fn + fp + tn; }
  ConfusionMatrix swapped() const { return {tn, fp, fn, tp}; }

  ConfusionMatrix& operator+=(const ConfusionMatrix& o) {
    tp += o.tp;
    fn += o.fn;
    fp += o.fp;
    tn += o.tn;
    return *this;
  }
};

/// Metrics with zero denominators are reported absent, never zero.
struct ClassMetrics {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f_measure;
};

struct EvalMetrics {
  ConfusionMatrix confusion;
  std::optional<double> accuracy;
  ClassMetrics deferred;      // positive class = Deferred
  ClassMetrics non_deferred;  // positive class swapped
};

ClassMetrics class_metrics(const ConfusionMatrix& cm);
EvalMetrics metrics_from_confusion(const ConfusionMatrix& cm);

nlohmann::json metrics_to_json(const EvalMetrics& metrics);

}  // namespace tiercrawl
