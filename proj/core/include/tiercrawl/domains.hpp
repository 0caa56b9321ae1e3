#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tiercrawl {

/// Returns the registrable domain of a host: the public suffix plus one
/// label. Built on an embedded table of common multi-label suffixes;
/// `extra_suffixes` extends it from config. IP literals and single-label
/// hosts (e.g. "localhost") are returned unchanged.
std::string registrable_domain(std::string_view host,
                               const std::vector<std::string>& extra_suffixes = {});

bool is_ip_literal(std::string_view host);

}  // namespace tiercrawl
