#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bezout/matrix.hpp"
#include "bezout/rings.hpp"

namespace bezout {

using Json = nlohmann::ordered_json;

/// Element syntax: integers as decimal strings, rationals as "p/q" (or "p"
/// when the denominator is 1), polynomials as ascending arrays of rationals.
template <BezoutRing R>
Json element_to_json(const typename R::value_type& v);

/// Accepts the canonical syntax plus JSON integers, and scalars for
/// polynomial entries (read as constants).
template <BezoutRing R>
typename R::value_type element_from_json(const Json& j);

/// {"ring": tag, "rows": m, "cols": n, "entries": [[...], ...]}
template <BezoutRing R>
Json matrix_to_json(const Mat<R>& m);

/// Reads a matrix document. The document's ring tag must match R unless
/// reinterpret is set, in which case the entries are read in R directly.
template <BezoutRing R>
Mat<R> matrix_from_json(const Json& j, bool reinterpret = false);

/// Canonical text of a matrix file: one row per line, trailing newline.
/// format(parse(format(m))) == format(m) and parse(format(m)) == m.
template <BezoutRing R>
std::string format_matrix_file(const Mat<R>& m);

template <BezoutRing R>
Mat<R> parse_matrix_file(std::string_view text, bool reinterpret = false);

/// Ring tag declared by a matrix document; throws parse_error if absent.
RingKind document_ring(const Json& j);

Json parse_json(std::string_view text);

#define BEZOUT_DECLARE_IO(R)                                                          \
    extern template Json element_to_json<R>(const typename R::value_type&);          \
    extern template typename R::value_type element_from_json<R>(const Json&);        \
    extern template Json matrix_to_json<R>(const Mat<R>&);                           \
    extern template Mat<R> matrix_from_json<R>(const Json&, bool);                   \
    extern template std::string format_matrix_file<R>(const Mat<R>&);                \
    extern template Mat<R> parse_matrix_file<R>(std::string_view, bool);
BEZOUT_FOR_EACH_RING(BEZOUT_DECLARE_IO)
#undef BEZOUT_DECLARE_IO

} // namespace bezout
