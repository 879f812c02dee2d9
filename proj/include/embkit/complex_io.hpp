#ifndef EMBKIT_COMPLEX_IO_HPP
#define EMBKIT_COMPLEX_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "embkit/simplicial_complex.hpp"

namespace embkit {

/// A complex plus the optional metadata object carried by the structured
/// file format. Round-trips are lossless on facets; metadata is preserved
/// verbatim.
struct ComplexFile {
    SimplicialComplex complex;
    nlohmann::ordered_json metadata; // null when absent
};

/// Text format: one maximal face per line, space-separated labels, '#'
/// starts a comment.
SimplicialComplex read_complex_text(std::istream& in);
void write_complex_text(std::ostream& out, const SimplicialComplex& K);

/// Structured format: {"facets": [[...], ...], "metadata": {...}}.
ComplexFile read_complex_json(std::istream& in);
void write_complex_json(std::ostream& out, const ComplexFile& file);

/// Loads either format, sniffing JSON by a leading '{'.
ComplexFile load_complex(const std::string& path);
void save_complex(const std::string& path, const ComplexFile& file);

} // namespace embkit

#endif
