#include "qpr/field.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace qpr {

bool is_prime(std::uint64_t m) {
    if (m < 2)
        return false;
    if (m % 2 == 0)
        return m == 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2)
        if (m % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31))
        throw DomainError("prime modulus must be < 2^31, got " + std::to_string(p));
    if (!is_prime(p))
        throw DomainError("modulus " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind = FieldKind::PrimeField;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::parse(std::string_view tag) {
    if (tag == "Q")
        return rationals();
    if (tag.size() >= 2 && tag.front() == 'F') {
        std::uint32_t p = 0;
        auto digits = tag.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size()) {
            try {
                return prime(p);
            } catch (const DomainError& e) {
                throw ParseError(std::string("bad field tag '") + std::string(tag) + "': " + e.what());
            }
        }
    }
    throw ParseError("bad field tag '" + std::string(tag) + "' (expected Q or F<p>)");
}

std::string FieldSpec::str() const {
    return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
}

namespace {

// Accepts [-]digits or [-]digits/digits. No whitespace, no '+'.
bool looks_like_fraction_token(std::string_view t, bool allow_slash) {
    if (t.empty())
        return false;
    std::size_t i = t.front() == '-' ? 1 : 0;
    std::size_t digits = 0;
    for (; i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])); ++i)
        ++digits;
    if (digits == 0)
        return false;
    if (i == t.size())
        return true;
    if (!allow_slash || t[i] != '/')
        return false;
    ++i;
    std::size_t den_digits = 0;
    for (; i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])); ++i)
        ++den_digits;
    return den_digits > 0 && i == t.size();
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (!looks_like_fraction_token(text, /*allow_slash=*/true))
        throw ParseError("bad rational token '" + std::string(text) + "'");
    mpq_class v(std::string(text), 10);
    if (sgn(v.get_den()) == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::inv() const {
    if (is_zero())
        throw DomainError("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r), raw_t{});
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Fp::Fp(std::int64_t value, std::uint32_t p) {
    if (p < 2)
        throw DomainError("GF(p) element needs a modulus >= 2");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    v_ = static_cast<std::uint32_t>(r);
    p_ = p;
}

Fp Fp::parse(std::string_view text, std::uint32_t p) {
    if (text.find('/') != std::string_view::npos)
        throw ParseError("fraction '" + std::string(text) + "' is not a GF(p) residue");
    if (!looks_like_fraction_token(text, /*allow_slash=*/false))
        throw ParseError("bad GF(p) token '" + std::string(text) + "'");
    // Residues in files may be arbitrarily large integers; reduce exactly.
    mpz_class z(std::string(text), 10);
    std::uint32_t r = static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
    return Fp(r, p);
}

void Fp::check_same(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_ || a.p_ == 0)
        throw DomainError("GF(p) arithmetic across mismatched moduli (" + std::to_string(a.p_) +
                          " vs " + std::to_string(b.p_) + ")");
}

Fp Fp::inv() const {
    if (v_ == 0)
        throw DomainError("inverse of zero");
    // Extended Euclid on (v, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = v_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0)
        t += p_;
    return Fp(t, p_);
}

Scalar scalar_parse(std::string_view text, const FieldSpec& field) {
    if (field.kind == FieldKind::Rationals)
        return Rational::parse(text);
    return Fp::parse(text, field.p);
}

std::string scalar_str(const Scalar& s) {
    return std::visit([](const auto& v) { return v.str(); }, s);
}

} // namespace qpr
