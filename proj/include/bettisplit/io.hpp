#ifndef BETTISPLIT_IO_HPP
#define BETTISPLIT_IO_HPP

#include "bettisplit/betti.hpp"
#include "bettisplit/complex.hpp"
#include "bettisplit/ideal.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bettisplit {

struct IdealDocument {
  MonomialIdeal ideal = MonomialIdeal::zero(0);
  std::vector<std::string> warnings;
};

/// Text form:
///
///   ring 6
///   x4*x5*x6, x1*x2*x6
///   x1 x3^2 x4        # juxtaposition and spaces work as products
///
/// Generators are separated by commas or newlines, `1` is the unit and `#`
/// starts a comment. No generators means the zero ideal. The JSON form
/// {"n": 2, "gens": [[1,0],[1,1]]} lists exponent vectors. Non-minimal input
/// is minimalized with a warning. MalformedInput on any syntax error.
IdealDocument parse_ideal_document(std::string_view text);
MonomialIdeal parse_ideal(std::string_view text);

/// Canonical text form, one generator per line; parse_ideal inverts it.
std::string render_ideal(const MonomialIdeal& ideal);

struct ComplexDocument {
  SimplicialComplex complex;
  /// Facets in file order, non-maximal and repeated entries removed.
  std::vector<FaceMask> facet_order;
  std::vector<std::string> warnings;
};

/// Text form: `vertices <n>` followed by bracketed facets such as [1,2,3];
/// [] is the empty face. JSON alternative {"n": 6, "facets": [[1,2,3], ...]}.
ComplexDocument parse_complex_document(std::string_view text);
SimplicialComplex parse_complex(std::string_view text);

std::string render_complex(const SimplicialComplex& complex);
std::string render_facets(std::span<const FaceMask> facets, std::size_t n_vertices);

enum class TableFormat { triangle, resolution, csv, json };

/// MalformedInput for an unknown name.
TableFormat parse_table_format(std::string_view name);

inline constexpr std::string_view zero_ideal_sentinel = "zero ideal";

/// Deterministic rendering. `resolution` reads like
/// 0 -> R(-6) -> R(-5)^3 -> R(-3)^3 -> I. An empty table renders the zero
/// ideal sentinel in every format.
std::string render_betti_table(const BettiTable& table, TableFormat format);

/// Whole file as a string; MalformedInput if it cannot be read.
std::string read_text_file(const std::string& path);

} // namespace bettisplit

#endif
