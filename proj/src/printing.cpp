#include "hsub/printing.hpp"

#include <sstream>

namespace hsub {

std::string delta_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "Δ";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string to_string(const DiffOp& op, OpFormat format) {
    std::ostringstream os;
    const LaurentMatrix& s = op.symbol();
    for (int i = 0; i < s.rows(); ++i) {
        for (int j = 0; j < s.cols(); ++j) {
            if (j) os << ", ";
            if (format == OpFormat::symbol)
                os << s.at(i, j).str();
            else
                os << delta_str(s.at(i, j).delta_expansion());
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace hsub
