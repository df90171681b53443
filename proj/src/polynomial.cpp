#include "matlin/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace matlin {

namespace {

const std::vector<int>& tiebreak_sequence() {
    static const std::vector<int> seq = [] {
        std::vector<int> s;
        for (int e = 1; e <= Matroid::max_label; ++e) s.push_back(xvar(e));
        for (int e = 1; e <= Matroid::max_label; ++e) s.push_back(yvar(e));
        s.push_back(xvar(0));
        s.push_back(yvar(0));
        return s;
    }();
    return seq;
}

std::string coefficient_prefix(const Rat& c, bool first) {
    std::string out;
    const Rat mag = c < 0 ? Rat(-c) : c;
    if (first)
        out = c < 0 ? "-" : "";
    else
        out = c < 0 ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    return out;
}

}  // namespace

Monomial Monomial::of(ElementSet squarefree) {
    Monomial m;
    for (int v : squarefree) m.exp[static_cast<std::size_t>(v)] = 1;
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > o.exp[i]) return false;
    return true;
}

int Monomial::degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
}

std::optional<ElementSet> Monomial::as_set() const {
    ElementSet s;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] > 1) return std::nullopt;
        if (exp[i] == 1) s = s.with(static_cast<int>(i));
    }
    return s;
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += variable_name(static_cast<int>(i));
        if (exp[i] > 1) out += "^" + std::to_string(exp[i]);
    }
    return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        const int e = a.exp[i] + b.exp[i];
        if (e > 255) throw std::overflow_error("monomial exponent overflow");
        m.exp[i] = static_cast<std::uint8_t>(e);
    }
    return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (b.exp[i] > a.exp[i]) throw std::invalid_argument("monomial does not divide");
        m.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
    }
    return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
    return m;
}

void HomogPolynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat HomogPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void HomogPolynomial::add_multiple(const Rat& c, const Monomial& m, const HomogPolynomial& f) {
    for (const auto& [t, a] : f.terms_) add_term(m * t, c * a);
}

std::string HomogPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Reverse map order lists x-heavy terms first, e.g. x3*y4 + x4*y3.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool first = it == terms_.rbegin();
        const std::string body = it->first.to_string();
        const Rat mag = it->second < 0 ? Rat(-it->second) : it->second;
        if (body == "1")
            out += (first ? (it->second < 0 ? "-" : "") : (it->second < 0 ? " - " : " + ")) + matlin::to_string(mag);
        else
            out += coefficient_prefix(it->second, first) + body;
    }
    return out;
}

TermOrder::TermOrder(std::array<Rat, 64> weights) : w_(std::move(weights)) {
    for (int e = 0; e < y_offset; ++e)
        if (w_[static_cast<std::size_t>(yvar(e))] != 0) throw std::invalid_argument("y variables must have weight zero");
}

TermOrder TermOrder::realizing(const LinearOrder& order) {
    std::array<Rat, 64> w{};
    const int n = order.size();
    for (int e : order.sequence()) w[static_cast<std::size_t>(xvar(e))] = n + 1 - order.position(e);
    return TermOrder(w);
}

TermOrder TermOrder::realizing_affine(const LinearOrder& order_with_zero) {
    if (!order_with_zero.ground().contains(0)) throw std::invalid_argument("affine order must place element 0");
    std::array<Rat, 64> w{};
    const int p0 = order_with_zero.position(0);
    for (int e : order_with_zero.sequence())
        if (e != 0) w[static_cast<std::size_t>(xvar(e))] = p0 - order_with_zero.position(e);
    return TermOrder(w);
}

TermOrder TermOrder::from_x_weights(ElementSet ground, std::span<const Rat> weights) {
    if (weights.size() != static_cast<std::size_t>(ground.size()))
        throw std::invalid_argument("one weight per element expected");
    std::array<Rat, 64> w{};
    std::size_t i = 0;
    for (int e : ground) w[static_cast<std::size_t>(xvar(e))] = weights[i++];
    return TermOrder(w);
}

Rat TermOrder::weight_of(const Monomial& m) const {
    Rat s = 0;
    for (std::size_t i = 0; i < y_offset; ++i)
        if (m.exp[i]) s += w_[i] * m.exp[i];
    return s;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
    const Rat wa = weight_of(a), wb = weight_of(b);
    if (wa != wb) return wa < wb;
    for (int v : tiebreak_sequence()) {
        const auto i = static_cast<std::size_t>(v);
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
    }
    return false;
}

LinearOrder TermOrder::induced_order(ElementSet ground) const {
    std::vector<int> seq = ground.elements();
    std::stable_sort(seq.begin(), seq.end(), [&](int a, int b) {
        return w_[static_cast<std::size_t>(xvar(a))] > w_[static_cast<std::size_t>(xvar(b))];
    });
    return LinearOrder(seq);
}

std::string LinearForm::to_string() const {
    std::string out;
    for (int e : support) out += coefficient_prefix(coeffs[static_cast<std::size_t>(e)], out.empty()) + "x" + std::to_string(e);
    if (constant() != 0) {
        const Rat mag = constant() < 0 ? Rat(-constant()) : constant();
        out += (out.empty() ? (constant() < 0 ? "-" : "") : (constant() < 0 ? " - " : " + ")) + matlin::to_string(mag);
    }
    return out.empty() ? "0" : out;
}

std::vector<LinearForm> cocircuit_forms(const RatMatrix& a, std::span<const Rat> b, const LinearOrder* order) {
    const std::size_t rows = a.rows(), n = a.cols();
    if (!b.empty() && b.size() != rows) throw std::invalid_argument("right-hand side length must match the row count");
    const std::size_t rank_a = rank(a);

    // Column 0 holds -b so that row combinations give a.x - b directly.
    RatMatrix aug(rows, n + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        aug(i, 0) = b.empty() ? Rat(0) : Rat(-b[i]);
        for (std::size_t j = 0; j < n; ++j) aug(i, j + 1) = a(i, j);
    }
    const RrefResult rr = rref(aug);
    if (rr.rank > rank_a) throw InconsistentSystem("A x = b has no solution");
    if (rank_a < rows) throw RankDeficient("matrix rows are linearly dependent");

    const Matroid m = Matroid::from_matrix(a);
    const LinearOrder natural = LinearOrder::natural(m.ground());
    const LinearOrder& ord = order ? *order : natural;

    std::vector<LinearForm> forms;
    for (ElementSet d : m.cocircuits()) {
        std::vector<std::size_t> hcols;
        for (int e : m.ground() - d) hcols.push_back(static_cast<std::size_t>(e));
        RatMatrix r_h(rows, hcols.size());
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < hcols.size(); ++j) r_h(i, j) = rr.matrix(i, hcols[j]);
        const RatMatrix y = kernel_basis(r_h.transposed());
        if (y.rows() != 1) throw std::logic_error("cocircuit " + d.to_string() + " does not give a unique form");

        LinearForm f{{}, std::vector<Rat>(n + 1, Rat(0))};
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i < rows; ++i) f.coeffs[j] += y(0, i) * rr.matrix(i, j);
        for (std::size_t j = 1; j <= n; ++j)
            if (f.coeffs[j] != 0) f.support = f.support.with(static_cast<int>(j));
        if (f.support != d) throw std::logic_error("form support differs from cocircuit " + d.to_string());
        const Rat scale = f.coeffs[static_cast<std::size_t>(ord.min_of(d))];
        for (auto& c : f.coeffs) c /= scale;
        forms.push_back(std::move(f));
    }
    return forms;
}

HomogPolynomial homogenize(const LinearForm& f) {
    HomogPolynomial p;
    for (int d : f.support)
        p.add_term(Monomial::of(ElementSet{xvar(d)} | yvars(f.support.without(d))), f.coeffs[static_cast<std::size_t>(d)]);
    p.add_term(Monomial::of(yvars(f.support)), f.constant());
    return p;
}

Monomial leading_term(const HomogPolynomial& f, const TermOrder& ord) {
    if (f.is_zero()) throw ZeroPolynomial("the zero polynomial has no leading term");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || ord.less(*best, m)) best = &m;
    return *best;
}

Rat leading_coefficient(const HomogPolynomial& f, const TermOrder& ord) {
    return f.coefficient(leading_term(f, ord));
}

HomogPolynomial reduce(HomogPolynomial f, std::span<const HomogPolynomial> gens, const TermOrder& ord) {
    std::vector<Monomial> lts;
    std::vector<Rat> lcs;
    for (const auto& g : gens) {
        lts.push_back(leading_term(g, ord));
        lcs.push_back(g.coefficient(lts.back()));
    }
    while (true) {
        const Monomial* best = nullptr;
        std::size_t best_gen = 0;
        for (const auto& [m, c] : f.terms()) {
            if (best && !ord.less(*best, m)) continue;
            for (std::size_t i = 0; i < lts.size(); ++i)
                if (lts[i].divides(m)) {
                    best = &m;
                    best_gen = i;
                    break;
                }
        }
        if (!best) return f;
        const Monomial t = *best;
        const Rat c = f.coefficient(t);
        f.add_multiple(-c / lcs[best_gen], t / lts[best_gen], gens[best_gen]);
    }
}

BuchbergerReport buchberger_verify(std::span<const HomogPolynomial> gens, const TermOrder& ord) {
    BuchbergerReport report;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Monomial lt_i = leading_term(gens[i], ord);
        const Rat lc_i = gens[i].coefficient(lt_i);
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const Monomial lt_j = leading_term(gens[j], ord);
            const Rat lc_j = gens[j].coefficient(lt_j);
            const Monomial l = lcm(lt_i, lt_j);
            HomogPolynomial s;
            s.add_multiple(1 / lc_i, l / lt_i, gens[i]);
            s.add_multiple(-1 / lc_j, l / lt_j, gens[j]);
            if (!reduce(std::move(s), gens, ord).is_zero()) report.groebner = false;
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            for (const auto& [a, ca] : gens[i].terms())
                for (const auto& [b, cb] : gens[j].terms())
                    if (a.divides(b)) report.reduced = false;
        }
    return report;
}

bool minimally_generates(std::span<const HomogPolynomial> gens, const TermOrder& ord) {
    std::vector<Monomial> lts;
    for (const auto& g : gens) lts.push_back(leading_term(g, ord));
    for (std::size_t i = 0; i < lts.size(); ++i)
        for (std::size_t j = 0; j < lts.size(); ++j)
            if (i != j && lts[j].divides(lts[i])) return false;
    return true;
}

}  // namespace matlin
