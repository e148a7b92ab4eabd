#include "bezout/matrix_io.hpp"

namespace bezout {

namespace {

std::string scalar_text(const Json& j, std::string_view what) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return j.is_number_unsigned() ? std::to_string(j.get<std::uint64_t>()) : std::to_string(j.get<std::int64_t>());
    raise(Errc::parse_error, std::string(what) + " entry must be a string or integer, got " + j.dump());
}

template <BezoutRing R>
struct ElementCodec;

template <>
struct ElementCodec<IntegerRing> {
    static Json write(const mpz_class& v) { return v.get_str(); }
    static mpz_class read(const Json& j) { return IntegerRing::from_text(scalar_text(j, "integer")); }
};

template <>
struct ElementCodec<RationalRing> {
    static Json write(const mpq_class& v) { return v.get_str(); }
    static mpq_class read(const Json& j) { return RationalRing::from_text(scalar_text(j, "rational")); }
};

template <>
struct ElementCodec<PolyRing> {
    static Json write(const Poly& p) {
        Json arr = Json::array();
        for (const auto& c : p.coeffs())
            arr.push_back(c.get_str());
        return arr;
    }
    static Poly read(const Json& j) {
        if (!j.is_array())
            return Poly(RationalRing::from_text(scalar_text(j, "polynomial")));
        std::vector<mpq_class> coeffs;
        coeffs.reserve(j.size());
        for (const auto& c : j)
            coeffs.push_back(RationalRing::from_text(scalar_text(c, "coefficient")));
        return Poly(std::move(coeffs));
    }
};

std::size_t read_dim(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        raise(Errc::parse_error, std::string("matrix document needs a nonnegative integer '") + key + "'");
    return j[key].get<std::size_t>();
}

} // namespace

RingKind document_ring(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j["ring"].is_string())
        raise(Errc::parse_error, "matrix document needs a string 'ring'");
    auto kind = parse_ring_tag(j["ring"].get<std::string>());
    if (!kind)
        raise(Errc::parse_error, "unknown ring '" + j["ring"].get<std::string>() + "'");
    return *kind;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::parse_error, std::string("malformed JSON: ") + e.what());
    }
}

template <BezoutRing R>
Json element_to_json(const typename R::value_type& v) {
    return ElementCodec<R>::write(v);
}

template <BezoutRing R>
typename R::value_type element_from_json(const Json& j) {
    return ElementCodec<R>::read(j);
}

template <BezoutRing R>
Json matrix_to_json(const Mat<R>& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(element_to_json<R>(m(i, j)));
        entries.push_back(std::move(row));
    }
    Json doc;
    doc["ring"] = std::string(ring_tag(R::kind));
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["entries"] = std::move(entries);
    return doc;
}

template <BezoutRing R>
Mat<R> matrix_from_json(const Json& j, bool reinterpret) {
    RingKind declared = document_ring(j);
    if (declared != R::kind && !reinterpret)
        raise(Errc::parse_error, "matrix declares ring '" + std::string(ring_tag(declared)) + "', expected '" +
                                     std::string(ring_tag(R::kind)) + "'");
    const std::size_t rows = read_dim(j, "rows");
    const std::size_t cols = read_dim(j, "cols");
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != rows)
        raise(Errc::parse_error, "'entries' must be an array of " + std::to_string(rows) + " rows");
    Mat<R> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j["entries"][i];
        if (!row.is_array() || row.size() != cols)
            raise(Errc::parse_error, "row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = element_from_json<R>(row[c]);
    }
    return m;
}

template <BezoutRing R>
std::string format_matrix_file(const Mat<R>& m) {
    Json doc = matrix_to_json(m);
    std::string out = "{\n";
    out += "  \"ring\": " + doc["ring"].dump() + ",\n";
    out += "  \"rows\": " + doc["rows"].dump() + ",\n";
    out += "  \"cols\": " + doc["cols"].dump() + ",\n";
    out += "  \"entries\": [";
    const auto& entries = doc["entries"];
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out += i == 0 ? "\n    " : ",\n    ";
        out += entries[i].dump();
    }
    out += entries.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

template <BezoutRing R>
Mat<R> parse_matrix_file(std::string_view text, bool reinterpret) {
    return matrix_from_json<R>(parse_json(text), reinterpret);
}

#define BEZOUT_INSTANTIATE_IO(R)                                               \
    template Json element_to_json<R>(const typename R::value_type&);          \
    template typename R::value_type element_from_json<R>(const Json&);        \
    template Json matrix_to_json<R>(const Mat<R>&);                           \
    template Mat<R> matrix_from_json<R>(const Json&, bool);                   \
    template std::string format_matrix_file<R>(const Mat<R>&);                \
    template Mat<R> parse_matrix_file<R>(std::string_view, bool);
BEZOUT_FOR_EACH_RING(BEZOUT_INSTANTIATE_IO)

} // namespace bezout
