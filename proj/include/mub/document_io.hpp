#pragma once

#include <filesystem>
#include <string>

#include "mub/entanglement.hpp"
#include "mub/matrix_core.hpp"

namespace mub {

/// JSON document schema for basis sets. Exact grids store integer exponents
/// relative to a document-wide root order (null = zero entry); bases without
/// an exact form store an [re, im] grid instead. Keys are emitted sorted and
/// numbers canonically, so identical sets serialize to identical bytes.
std::string to_json(const MubSet& set);
MubSet mub_set_from_json(const std::string& text);

void write_document(const MubSet& set, const std::filesystem::path& path);
MubSet read_document(const std::filesystem::path& path);

/// Plain-text rendering: one matrix per basis with entries written as
/// root-of-unity powers over the common denominator (e.g. "a^2" for a
/// third root squared), zero entries as ".".
std::string render_text(const MubSet& set);

/// Standalone LaTeX arrays, one per basis.
std::string render_latex(const MubSet& set);

/// Entanglement analysis of a set under one cut, as canonical JSON:
/// per-basis purity table and class, the conserved total with its reference
/// value, and the 2-design frame potential with its reference.
std::string analysis_to_json(const MubSet& set, const Bipartition& split);

}  // namespace mub
