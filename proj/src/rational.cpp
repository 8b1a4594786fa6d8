#include "lopsa/rational.hpp"

#include "lopsa/config.hpp"

#include <cmath>

namespace lopsa {

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InvalidInputError("empty rational literal");
    // mpq_class's string constructor accepts "p/q"; validate shape first so
    // garbage like "1/0" or "x" fails loudly.
    std::size_t slash = s.find('/');
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) return false;
        for (std::size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(s)) throw InvalidInputError("bad rational literal: " + s);
        return Rat(s);
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw InvalidInputError("bad rational literal: " + s);
    Rat r(s);
    if (r.get_den() == 0) throw InvalidInputError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

bool rat_is_integer(const Rat& r) {
    return r.get_den() == 1;
}

Int factorial(int n) {
    if (n < 0) throw InvalidInputError("factorial of negative argument");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

double log2_of(const Int& v) {
    if (v <= 0) throw InvalidInputError("log2 of non-positive value");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
}

} // namespace lopsa
