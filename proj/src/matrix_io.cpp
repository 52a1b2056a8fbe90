#include "qpr/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qpr {

namespace {

constexpr int kMaxOrder = 1000; // parse-time sanity cap

template <class S> SymMat<S> read_body(std::istream& in, int n, const FieldSpec& f) {
    std::vector<std::vector<S>> rows(static_cast<std::size_t>(n));
    std::string tok;
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            if (!(in >> tok))
                throw ParseError("matrix body ended at row " + std::to_string(i + 1) +
                                 ", column " + std::to_string(j + 1) + " (expected " +
                                 std::to_string(n) + "x" + std::to_string(n) + " entries)");
            rows[static_cast<std::size_t>(i)].push_back(field_parse<S>(tok, f));
        }
    }
    try {
        return SymMat<S>::from_rows(rows, f);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

} // namespace

FieldSpec matrix_field(const AnySymMatrix& m) {
    return std::visit([](const auto& v) { return v.field(); }, m);
}

int matrix_order(const AnySymMatrix& m) {
    return std::visit([](const auto& v) { return v.order(); }, m);
}

AnySymMatrix read_matrix(std::istream& in) {
    std::string tag, order_tok;
    if (!(in >> tag))
        throw ParseError("empty matrix input (expected header \"Q n\" or \"F<p> n\")");
    FieldSpec field = FieldSpec::parse(tag);
    if (!(in >> order_tok))
        throw ParseError("missing matrix order after field tag");
    int n = 0;
    auto [ptr, ec] = std::from_chars(order_tok.data(), order_tok.data() + order_tok.size(), n);
    if (ec != std::errc() || ptr != order_tok.data() + order_tok.size() || n < 1 ||
        n > kMaxOrder)
        throw ParseError("bad matrix order '" + order_tok + "' (expected 1.." +
                         std::to_string(kMaxOrder) + ")");
    AnySymMatrix m = field.kind == FieldKind::Rationals
                         ? AnySymMatrix(read_body<Rational>(in, n, field))
                         : AnySymMatrix(read_body<Fp>(in, n, field));
    std::string extra;
    if (in >> extra)
        throw ParseError("unexpected trailing content '" + extra + "' after the matrix body");
    return m;
}

void write_matrix(std::ostream& out, const AnySymMatrix& m) {
    std::visit(
        [&](const auto& v) {
            out << v.field().str() << ' ' << v.order() << '\n';
            for (int i = 0; i < v.order(); ++i) {
                for (int j = 0; j < v.order(); ++j) {
                    if (j)
                        out << ' ';
                    out << v.at(i, j).str();
                }
                out << '\n';
            }
        },
        m);
}

std::string matrix_str(const AnySymMatrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

AnySymMatrix read_matrix_file(const std::string& path) {
    if (path == "-")
        return read_matrix(std::cin);
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "' for reading");
    return read_matrix(in);
}

void write_matrix_file(const std::string& path, const AnySymMatrix& m) {
    if (path == "-") {
        write_matrix(std::cout, m);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open '" + path + "' for writing");
    write_matrix(out, m);
    if (!out.flush())
        throw ParseError("failed writing '" + path + "'");
}

} // namespace qpr
