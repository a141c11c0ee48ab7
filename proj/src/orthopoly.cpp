#include "detlab/orthopoly.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "detlab/determinant.hpp"
#include "detlab/int_matrix.hpp"

namespace detlab {

DiscreteMeasure::DiscreteMeasure(std::vector<mpz_class> nodes, std::vector<mpz_class> masses)
    : nodes_(std::move(nodes)), masses_(std::move(masses)) {
    if (nodes_.empty() || nodes_.size() != masses_.size()) {
        throw InvalidArgumentError("measure needs equally many nodes and masses, at least one");
    }
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        if (nodes_[i] >= nodes_[i + 1]) {
            throw InvalidArgumentError("measure nodes must be strictly increasing");
        }
    }
    for (const mpz_class& m : masses_) {
        if (m < 1) throw InvalidArgumentError("measure masses must be positive integers");
    }
}

std::string DiscreteMeasure::describe() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (i) out << ", ";
        out << nodes_[i] << ':' << masses_[i];
    }
    out << '}';
    return out.str();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coefficients_(std::move(coefficients)) {
    while (coefficients_.size() > 1 && coefficients_.back() == 0) coefficients_.pop_back();
    if (coefficients_.empty()) coefficients_.push_back(0);
}

const mpz_class& IntPolynomial::coefficient(std::size_t deg) const {
    static const mpz_class zero(0);
    return deg < coefficients_.size() ? coefficients_[deg] : zero;
}

std::string IntPolynomial::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = coefficients_.size(); d-- > 0;) {
        const mpz_class& c = coefficients_[d];
        if (c == 0 && !(first && d == 0)) continue;
        if (first) {
            if (sgn(c) < 0) out << '-';
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        mpz_class a = abs(c);
        if (d == 0) {
            out << a;
        } else {
            if (a != 1) out << a << '*';
            out << 'x';
            if (d > 1) out << '^' << d;
        }
        first = false;
    }
    if (first) out << '0';
    return out.str();
}

std::vector<mpz_class> moments(const DiscreteMeasure& mu, std::size_t upto) {
    std::vector<mpz_class> out(upto + 1);
    std::vector<mpz_class> power(mu.size(), 1);
    for (std::size_t j = 0; j <= upto; ++j) {
        for (std::size_t i = 0; i < mu.size(); ++i) {
            out[j] += mu.mass(i) * power[i];
        }
        if (j < upto) {
            for (std::size_t i = 0; i < mu.size(); ++i) power[i] *= mu.node(i);
        }
    }
    return out;
}

namespace {

IntMatrix hankel_matrix(const std::vector<mpz_class>& m, std::size_t n) {
    IntMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h.at(i, j) = m[i + j];
    return h;
}

}  // namespace

mpz_class hankel_det(const DiscreteMeasure& mu, std::size_t n) {
    if (n == 0) return 1;
    const std::vector<mpz_class> m = moments(mu, 2 * n - 2);
    return det_bareiss(hankel_matrix(m, n));
}

IntPolynomial orthogonal_poly(const DiscreteMeasure& mu, std::size_t n) {
    const std::size_t points = mu.size();
    if (n >= points) {
        throw DegreeOutOfRangeError("degree " + std::to_string(n) + " needs more than " +
                                    std::to_string(points) + " support points");
    }
    if (n == 0) return IntPolynomial({mpz_class(1)});

    // Last-row expansion of the bordered moment determinant: the coefficient
    // of x^j is (-1)^(n+j) times the minor that skips column j.
    const std::vector<mpz_class> m = moments(mu, 2 * n);
    std::vector<mpz_class> coeffs(n + 1);
    IntMatrix minor(n, n);
    for (std::size_t skip = 0; skip <= n; ++skip) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t col = 0;
            for (std::size_t j = 0; j <= n; ++j) {
                if (j == skip) continue;
                minor.at(i, col++) = m[i + j];
            }
        }
        coeffs[skip] = det_bareiss(minor);
        if ((n + skip) % 2 != 0) coeffs[skip] = -coeffs[skip];
    }
    IntPolynomial p(std::move(coeffs));
    if (p.degree() != n || sgn(p.leading_coefficient()) <= 0) {
        throw InternalDisagreementError("orthogonal_poly: leading coefficient of P_" +
                                        std::to_string(n) + " is not positive");
    }
    return p;
}

mpz_class eval_poly(const IntPolynomial& p, const mpz_class& x) {
    const auto& c = p.coefficients();
    mpz_class acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = acc * x + c[i];
    }
    return acc;
}

mpz_class inner_product(const DiscreteMeasure& mu, const IntPolynomial& p,
                        const IntPolynomial& q) {
    mpz_class sum(0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        sum += mu.mass(i) * eval_poly(p, mu.node(i)) * eval_poly(q, mu.node(i));
    }
    return sum;
}

// --- text format -------------------------------------------------------------

std::string write_measure(const DiscreteMeasure& mu) {
    std::ostringstream out;
    out << "detlab-measure v1\n";
    out << "points " << mu.size() << "\n";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        out << mu.node(i) << ' ' << mu.mass(i) << '\n';
    }
    return out.str();
}

void write_measure_file(const DiscreteMeasure& mu, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path.string());
    out << write_measure(mu);
    if (!out.flush()) throw ParseError("write failed: " + path.string());
}

namespace {

mpz_class parse_mpz(const std::string& tok, const std::string& where) {
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) throw ParseError(where + ": bad integer '" + tok + "'");
    for (; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') {
            throw ParseError(where + ": bad integer '" + tok + "'");
        }
    }
    return mpz_class(tok);
}

}  // namespace

DiscreteMeasure read_measure(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "detlab-measure v1") {
        throw ParseError("expected header 'detlab-measure v1', got '" + line + "'");
    }
    if (!std::getline(in, line)) throw ParseError("missing points line");
    std::istringstream head(line);
    std::string kw;
    std::size_t n = 0;
    if (!(head >> kw >> n) || kw != "points" || n < 1) {
        throw ParseError("malformed points line: '" + line + "'");
    }
    std::vector<mpz_class> nodes, masses;
    nodes.reserve(n);
    masses.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw ParseError("missing point " + std::to_string(i + 1));
        std::istringstream row(line);
        std::string a, m, extra;
        if (!(row >> a >> m)) throw ParseError("point " + std::to_string(i + 1) + ": need 'node mass'");
        if (row >> extra) throw ParseError("point " + std::to_string(i + 1) + ": trailing data");
        const std::string where = "point " + std::to_string(i + 1);
        nodes.push_back(parse_mpz(a, where));
        masses.push_back(parse_mpz(m, where));
    }
    return DiscreteMeasure(std::move(nodes), std::move(masses));
}

DiscreteMeasure read_measure(const std::string& text) {
    std::istringstream in(text);
    return read_measure(in);
}

DiscreteMeasure read_measure_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open: " + path.string());
    return read_measure(in);
}

}  // namespace detlab
