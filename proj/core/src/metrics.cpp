#include "tiercrawl/metrics.hpp"

#include <nlohmann/json.hpp>

namespace tiercrawl {

ClassMetrics class_metrics(const ConfusionMatrix& cm) {
  ClassMetrics m;
  if (cm.tp + cm.fp > 0) m.precision = double(cm.tp) / double(cm.tp + cm.fp);
  if (cm.tp + cm.fn > 0) m.recall = double(cm.tp) / double(cm.tp + cm.fn);
  if (m.precision && m.recall && (*m.precision + *m.recall) > 0.0)
    m.f_measure = 2.0 * (*m.precision) * (*m.recall) / (*m.precision + *m.recall);
  return m;
}

EvalMetrics metrics_from_confusion(const ConfusionMatrix& cm) {
  EvalMetrics metrics;
  metrics.confusion = cm;
  if (cm.total() > 0) metrics.accuracy = double(cm.tp + cm.tn) / double(cm.total());
  metrics.deferred = class_metrics(cm);
  metrics.non_deferred = class_metrics(cm.swapped());
  return metrics;
}

namespace {

nlohmann::json class_metrics_to_json(const ClassMetrics& m) {
  nlohmann::json j;
  j["precision"] = m.precision ? nlohmann::json(*m.precision) : nlohmann::json();
  j["recall"] = m.recall ? nlohmann::json(*m.recall) : nlohmann::json();
  j["f_measure"] = m.f_measure ? nlohmann::json(*m.f_measure) : nlohmann::json();
  return j;
}

}  // namespace

nlohmann::json metrics_to_json(const EvalMetrics& metrics) {
  nlohmann::json j;
  j["confusion"] = {{"tp", metrics.confusion.tp},
                    {"fn", metrics.confusion.fn},
                    {"fp", metrics.confusion.fp},
                    {"tn", metrics.confusion.tn}};
  j["accuracy"] = metrics.accuracy ? nlohmann::json(*metrics.accuracy) : nlohmann::json();
  j["deferred"] = class_metrics_to_json(metrics.deferred);
  j["non_deferred"] = class_metrics_to_json(metrics.non_deferred);
  return j;
}

}  // namespace tiercrawl
