#include "heisuper/gauss_rational.hpp"

#include <stdexcept>

namespace heisuper {

void GaussRational::canonicalize(mpq_class& q) {
    if (q.get_den() == 0) throw std::domain_error("GaussRational: zero denominator");
    q.canonicalize();
}

GaussRational GaussRational::fraction(long num, long den) {
    if (den == 0) throw std::domain_error("GaussRational::fraction: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussRational(q);
}

mpq_class GaussRational::parse_fraction(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty fraction string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed fraction string: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in fraction string: " + s);
    q.canonicalize();
    return q;
}

GaussRational GaussRational::parse(const std::string& re, const std::string& im) {
    return GaussRational(parse_fraction(re), parse_fraction(im));
}

GaussRational GaussRational::inv() const {
    if (is_zero()) throw std::domain_error("GaussRational::inv: division by zero");
    if (im_ == 0) return GaussRational(1 / re_);
    // conj / (re^2 + im^2)
    mpq_class norm = re_ * re_ + im_ * im_;
    return GaussRational(re_ / norm, -im_ / norm);
}

namespace {
std::string fraction_str(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// "1/2" -> "1/2", "-3/1" -> "-3"; used only for display.
std::string pretty_fraction(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return fraction_str(q);
}
} // namespace

std::string GaussRational::re_str() const { return fraction_str(re_); }
std::string GaussRational::im_str() const { return fraction_str(im_); }

std::string GaussRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += pretty_fraction(re_);
    if (im_ != 0) {
        if (im_ > 0 && !out.empty()) out += "+";
        if (im_ == -1)
            out += "-";
        else if (im_ != 1)
            out += pretty_fraction(im_);
        out += "i";
    }
    return out;
}

} // namespace heisuper
