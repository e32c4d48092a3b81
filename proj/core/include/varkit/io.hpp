#pragma once

#include <map>
#include <string>

#include "varkit/bigfloat.hpp"
#include "varkit/divdiff.hpp"
#include "varkit/values.hpp"
#include "varkit/variety.hpp"

namespace varkit {

/// Facts about a variety file gathered while loading it.
struct VarietyLoadInfo {
  bool was_sorted = true;      // rows were already in canonical order
  bool explicit_n_max = false; // file carried a "# nmax N" directive
};

/// Reads a variety file: one node per line as "re im mult", '#' starts a
/// comment, and a "# nmax N" line declares the truncation octave.  Without
/// the directive the file is taken to list the whole variety (complete).
MultiplicityVariety load_variety(const std::string& path,
                                 mpfr_prec_t precision_bits = kStoragePrecision,
                                 VarietyLoadInfo* info = nullptr);

/// Writes a variety file that load_variety round-trips exactly: canonical
/// order, full stored precision, and the "# nmax" directive unless the
/// variety is complete.
void save_variety(const std::string& path, const MultiplicityVariety& V);

/// Reads a value file: one slot per line as "j l re im" with 1-based point
/// index j and 0-based derivative slot l.  Every slot of V must be assigned
/// exactly once.
ValueSequence load_values(const std::string& path, const MultiplicityVariety& V,
                          mpfr_prec_t precision_bits = kStoragePrecision);

void save_values(const std::string& path, const MultiplicityVariety& V,
                 const ValueSequence& W);

/// Writes a divided-difference table, one "j l re im" row per slot of the
/// first T.points() points of V, after a "# precision_bits" header.
void save_table(const std::string& path, const MultiplicityVariety& V,
                const DividedDifferenceTable& T);

/// Parses a plain-text "key=value" config file ('#' comments and blank lines
/// ignored, values trimmed).  Repeated keys are rejected.
std::map<std::string, std::string> load_config(const std::string& path);

/// Shortest decimal string that round-trips the double exactly.
std::string format_double(double v);

}  // namespace varkit
