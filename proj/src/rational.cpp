#include "hurwitz/rational.hpp"

#include <algorithm>
#include <stdexcept>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator in '" + s + "'");
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational literal '" + s + "'");
    }
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_to_decimal_if_exact(const Rat& r) {
    Int den = r.get_den();
    int twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1 && den != -1) return rat_to_string(r);
    int digits = std::max(twos, fives);
    if (digits == 0) return r.get_num().get_str();
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled = r.get_num() * scale / r.get_den();
    bool neg = scaled < 0;
    std::string body = Int(abs(scaled)).get_str();
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (neg ? "-" : "") + body;
}

Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (long i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

Int rising_product(long from, long to) {
    Int p = 1;
    for (long i = from; i <= to; ++i) p *= i;
    return p;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace hurwitz
