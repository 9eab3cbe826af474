#pragma once

#include <string>

#include "hypspec/trace_stats.hpp"

namespace hypspec {

/// Git-style content hash of a file: SHA-1 over "blob <size>\0<bytes>".
std::string file_blob_hash(const std::string& path);

/// SHA-1 of a raw byte string, lowercase hex.
std::string sha1_hex(const std::string& bytes);

/// StatReport as a JSON object string (used by the CLI and embedded in
/// artifacts). `config_json` and `spectrum_hash` are embedded verbatim.
std::string report_to_json(const StatReport& rep, const std::string& config_json,
                           const std::string& spectrum_hash);

/// Stable CSV header and row for plot pipelines:
/// q,A,L,tau,op,exact_var,mc_var,mc_se,ref_var,ifq,samples,seed,cutoff_NL
std::string csv_header();
std::string report_to_csv_row(const StatReport& rep);

} // namespace hypspec
