#include "fatpart/numeric.hpp"

namespace fatpart {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad decimal '" + s + "'");
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head = head.substr(1);
    if (head.empty() || head == "+") head = "0";
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int num = Int(head) * scale + (frac.empty() ? Int(0) : Int(frac));
    Rat out(num, scale);
    return neg ? -out : out;
}

std::string format_rational(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace fatpart
