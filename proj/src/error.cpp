#include "pcl/error.hpp"

namespace pcl {

const char* errc_name(errc code) {
  switch (code) {
    case errc::universe_mismatch: return "UNIVERSE_MISMATCH";
    case errc::resource_limit: return "RESOURCE_LIMIT";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::duplicate_name: return "DUPLICATE_NAME";
    case errc::zero_count: return "ZERO_COUNT";
    case errc::unknown_port: return "UNKNOWN_PORT";
    case errc::unknown_symbol: return "UNKNOWN_SYMBOL";
    case errc::empty_configuration: return "EMPTY_CONFIGURATION";
    case errc::empty_loop: return "EMPTY_LOOP";
    case errc::invalid_interaction: return "INVALID_INTERACTION";
    case errc::not_partially_trustworthy: return "NOT_PARTIALLY_TRUSTWORTHY";
    case errc::insufficient_pipes: return "INSUFFICIENT_PIPES";
    case errc::insufficient_nodes: return "INSUFFICIENT_NODES";
  }
  return "UNKNOWN_ERROR";
}

}  // namespace pcl
