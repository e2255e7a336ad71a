#ifndef TTD_IO_HPP
#define TTD_IO_HPP

#include "ttd/designs.hpp"
#include "ttd/hilbert.hpp"
#include "ttd/search.hpp"

#include <string>

namespace ttd {

/// Configuration JSON schema (UTF-8): scalars are 4-arrays [w,x,y,z],
/// vectors are arrays of scalars, "weights" is optional:
/// {"field":"H","dim":2,"vectors":[[[1,0,0,0],[0,0,0,0]],...],"weights":[1.0,...]}
Configuration config_from_json(const std::string& text);
std::string config_to_json(const Configuration& cfg, int indent = 2);

Configuration load_config(const std::string& path);
void save_config(const Configuration& cfg, const std::string& path);

std::string report_to_json(const DesignReport& report, int indent = 2);
std::string report_table(const DesignReport& report);

std::string search_result_to_json(const SearchResult& result, int indent = 2);
void save_trajectory_csv(const SearchResult& result, const std::string& path);

} // namespace ttd

#endif
