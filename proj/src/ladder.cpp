#include "dcf/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dcf {

namespace {

void check_ket(const LadderKet& k) {
    if (k.level < 0 || k.center < 0)
        throw std::invalid_argument("LadderKet: indices must be nonnegative");
}

// Apply a per-ket rule returning optional (annihilation allowed) over a sum.
template <typename F>
KetSum map_kets(const KetSum& s, F&& f) {
    KetSum out;
    for (const auto& k : s.terms)
        if (auto r = f(k)) out.add(*r);
    out.canonicalize();
    return out;
}

cplx phase(double delta) { return {std::cos(delta), std::sin(delta)}; }

}  // namespace

KetSum& KetSum::add(const LadderKet& k) {
    check_ket(k);
    terms.push_back(k);
    return *this;
}

KetSum& KetSum::add(const KetSum& other) {
    for (const auto& k : other.terms) add(k);
    return *this;
}

KetSum KetSum::scaled(cplx s) const {
    KetSum out;
    for (const auto& k : terms) out.terms.push_back({k.level, k.center, k.coeff * s});
    return out;
}

void KetSum::canonicalize(double drop_below) {
    std::sort(terms.begin(), terms.end(), [](const LadderKet& a, const LadderKet& b) {
        return a.level != b.level ? a.level < b.level : a.center < b.center;
    });
    std::vector<LadderKet> merged;
    for (const auto& k : terms) {
        if (!merged.empty() && merged.back().level == k.level && merged.back().center == k.center)
            merged.back().coeff += k.coeff;
        else
            merged.push_back(k);
    }
    terms.clear();
    for (const auto& k : merged)
        if (std::abs(k.coeff) > drop_below) terms.push_back(k);
}

std::optional<LadderKet> theta_minus(const LadderKet& ket) {
    check_ket(ket);
    if (ket.level == 0) return std::nullopt;
    return LadderKet{ket.level - 1, ket.center, ket.coeff * std::sqrt(double(ket.level))};
}

LadderKet theta_plus(const LadderKet& ket) {
    check_ket(ket);
    return {ket.level + 1, ket.center, ket.coeff * std::sqrt(double(ket.level + 1))};
}

LadderKet shift_minus(const LadderKet& ket) {
    check_ket(ket);
    if (ket.center == 0)
        throw std::domain_error("shift_minus: T- on center index 0 is undefined");
    return {ket.level, ket.center - 1, ket.coeff};
}

LadderKet shift_plus(const LadderKet& ket) {
    check_ket(ket);
    return {ket.level, ket.center + 1, ket.coeff};
}

std::optional<LadderKet> q_minus(const LadderKet& ket) {
    auto t = theta_minus(ket);
    if (!t) return std::nullopt;
    return shift_minus(*t);
}

LadderKet q_plus(const LadderKet& ket) { return theta_plus(shift_plus(ket)); }

KetSum theta_minus(const KetSum& s) { return map_kets(s, [](const LadderKet& k) { return theta_minus(k); }); }
KetSum theta_plus(const KetSum& s) {
    return map_kets(s, [](const LadderKet& k) { return std::optional<LadderKet>(theta_plus(k)); });
}
KetSum shift_minus(const KetSum& s) {
    return map_kets(s, [](const LadderKet& k) { return std::optional<LadderKet>(shift_minus(k)); });
}
KetSum shift_plus(const KetSum& s) {
    return map_kets(s, [](const LadderKet& k) { return std::optional<LadderKet>(shift_plus(k)); });
}
KetSum q_minus(const KetSum& s) { return map_kets(s, [](const LadderKet& k) { return q_minus(k); }); }
KetSum q_plus(const KetSum& s) {
    return map_kets(s, [](const LadderKet& k) { return std::optional<LadderKet>(q_plus(k)); });
}

KetSum s_q(const KetSum& s, int q) {
    if (q != 0 && q != 1) throw std::invalid_argument("s_q: q must be 0 or 1");
    const cplx norm = q == 0 ? cplx(1.0 / std::sqrt(2.0), 0.0) : cplx(0.0, -1.0 / std::sqrt(2.0));
    const double sign = q == 0 ? 1.0 : -1.0;
    KetSum out = q_minus(s);
    out.add(q_plus(s).scaled(sign));
    out.canonicalize();
    return out.scaled(norm);
}

cplx contract_levels(const KetSum& bra, const KetSum& ket) {
    cplx acc = 0.0;
    for (const auto& b : bra.terms)
        for (const auto& k : ket.terms)
            if (b.level == k.level) acc += std::conj(b.coeff) * k.coeff;
    return acc;
}

cplx render_ket_sum(const KetSum& s, double x, const FieldConfig& cfg) {
    cplx acc = 0.0;
    for (const auto& k : s.terms) acc += k.coeff * psi_level_at_center(k.level, k.center, x, cfg);
    return acc;
}

cplx inner(const SpinorExpansion& bra, const SpinorExpansion& ket) {
    const size_t n = std::min(bra.coeffs.size(), ket.coeffs.size());
    cplx acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += std::conj(bra.coeffs[i]) * ket.coeffs[i];
    return acc;
}

double norm(const SpinorExpansion& state) {
    double acc = 0.0;
    for (const auto& c : state.coeffs) acc += std::norm(c);
    return std::sqrt(acc);
}

SpinorExpansion big_theta_minus(const SpinorExpansion& state) {
    SpinorExpansion out;
    out.delta = state.delta;
    if (state.coeffs.size() <= 1) return out;
    out.coeffs.assign(state.coeffs.size() - 1, 0.0);
    for (size_t n = 1; n < state.coeffs.size(); ++n) {
        const double w = std::sqrt(double(n)) / (n == 1 ? std::sqrt(2.0) : 1.0);
        out.coeffs[n - 1] = phase(state.delta) * w * state.coeffs[n];
    }
    return out;
}

SpinorExpansion big_theta_plus(const SpinorExpansion& state) {
    SpinorExpansion out;
    out.delta = state.delta;
    if (state.coeffs.empty()) return out;
    out.coeffs.assign(state.coeffs.size() + 1, 0.0);
    for (size_t n = 0; n < state.coeffs.size(); ++n) {
        const double w = std::sqrt(double(n + 1)) / (n + 1 == 1 ? std::sqrt(2.0) : 1.0);
        out.coeffs[n + 1] = phase(-state.delta) * w * state.coeffs[n];
    }
    return out;
}

SpinorExpansion tilde_theta_plus(const SpinorExpansion& state) {
    SpinorExpansion out;
    out.delta = state.delta;
    if (state.coeffs.empty()) return out;
    out.coeffs.assign(state.coeffs.size() + 1, 0.0);
    for (size_t n = 0; n < state.coeffs.size(); ++n) {
        const double two = std::sqrt(std::pow(2.0, n == 0 ? 1.0 : 2.0));
        out.coeffs[n + 1] = two * phase(-state.delta) * std::sqrt(double(n + 1)) * state.coeffs[n];
    }
    return out;
}

int commutator_c(int n) {
    if (n < 0) throw std::invalid_argument("commutator_c: n must be nonnegative");
    SpinorExpansion unit;
    unit.coeffs.assign(n + 1, 0.0);
    unit.coeffs[n] = 1.0;
    unit.delta = 0.7;  // arbitrary; must cancel in the commutator

    SpinorExpansion fwd = big_theta_minus(tilde_theta_plus(unit));
    SpinorExpansion rev = tilde_theta_plus(big_theta_minus(unit));
    size_t len = std::max(fwd.coeffs.size(), rev.coeffs.size());
    fwd.coeffs.resize(len, 0.0);
    rev.coeffs.resize(len, 0.0);

    cplx scalar = 0.0;
    for (size_t i = 0; i < len; ++i) {
        const cplx d = fwd.coeffs[i] - rev.coeffs[i];
        if (i == size_t(n)) {
            scalar = d;
        } else if (std::abs(d) > 1e-12) {
            throw std::logic_error("commutator_c: non-scalar result at index " + std::to_string(i));
        }
    }
    if (std::abs(scalar.imag()) > 1e-12 ||
        std::abs(scalar.real() - std::round(scalar.real())) > 1e-12)
        throw std::logic_error("commutator_c: result is not a positive integer scalar");
    return int(std::round(scalar.real()));
}

KetSpinor phi_components(int n, int eta) {
    if (n < 0) throw std::invalid_argument("phi_components: n must be nonnegative");
    if (eta != 1 && eta != -1) throw std::invalid_argument("phi_components: eta must be +-1");
    KetSpinor s;
    if (n == 0) {
        s.down.add({0, 0, cplx(0, eta)});
        return s;
    }
    const double w = std::sqrt(0.5);
    s.up.add({n - 1, n, w});
    s.down.add({n, n, cplx(0, eta * w)});
    return s;
}

KetSpinor expansion_components(const SpinorExpansion& state, int eta) {
    KetSpinor out;
    for (size_t n = 0; n < state.coeffs.size(); ++n) {
        if (state.coeffs[n] == 0.0) continue;
        KetSpinor base = phi_components(int(n), eta);
        out.up.add(base.up.scaled(state.coeffs[n]));
        out.down.add(base.down.scaled(state.coeffs[n]));
    }
    out.up.canonicalize();
    out.down.canonicalize();
    return out;
}

namespace {

// f(N) factors of the matrix operators, evaluated at the level of the ket
// they multiply.
KetSum mul_ratio_np2_np1(const KetSum& s) {  // sqrt(N+2)/sqrt(N+1)
    KetSum out;
    for (const auto& k : s.terms)
        out.add({k.level, k.center,
                 k.coeff * std::sqrt(double(k.level + 2)) / std::sqrt(double(k.level + 1))});
    return out;
}

KetSum mul_inv_sqrt_np1(const KetSum& s) {  // 1/sqrt(N+1)
    KetSum out;
    for (const auto& k : s.terms)
        out.add({k.level, k.center, k.coeff / std::sqrt(double(k.level + 1))});
    return out;
}

KetSum mul_sqrt_np1(const KetSum& s) {  // sqrt(N+1)
    KetSum out;
    for (const auto& k : s.terms)
        out.add({k.level, k.center, k.coeff * std::sqrt(double(k.level + 1))});
    return out;
}

}  // namespace

KetSpinor theta_matrix_minus(const KetSpinor& s, double delta, int eta) {
    const double cd = std::cos(delta), sd = std::sin(delta);

    // Upper row: cos d [f_A theta-] up + eta sin d [f_B (theta-)^2] down.
    KetSum up = mul_ratio_np2_np1(theta_minus(s.up)).scaled(cd);
    up.add(mul_inv_sqrt_np1(theta_minus(theta_minus(s.down))).scaled(double(eta) * sd));
    // Lower row: -eta sin d [sqrt(N+1)] up + cos d [theta-] down.
    KetSum down = mul_sqrt_np1(s.up).scaled(-double(eta) * sd);
    down.add(theta_minus(s.down).scaled(cd));

    KetSpinor out{shift_minus(up), shift_minus(down)};
    out.up.canonicalize(1e-300);
    out.down.canonicalize(1e-300);
    return out;
}

KetSpinor theta_matrix_tilde_plus(const KetSpinor& s, double delta, int eta) {
    const KetSum up_in = shift_plus(s.up);
    const KetSum down_in = shift_plus(s.down);
    const cplx ph = phase(-delta);

    KetSum up = theta_plus(mul_ratio_np2_np1(up_in));
    up.add(mul_sqrt_np1(down_in).scaled(cplx(0, -eta)));
    KetSum down = theta_plus(theta_plus(mul_inv_sqrt_np1(up_in))).scaled(cplx(0, eta));
    down.add(theta_plus(down_in));

    KetSpinor out{up.scaled(ph), down.scaled(ph)};
    out.up.canonicalize(1e-300);
    out.down.canonicalize(1e-300);
    return out;
}

KetSpinor apply_sigma_y(const KetSpinor& s) {
    return {s.down.scaled(cplx(0, -1)), s.up.scaled(cplx(0, 1))};
}

}  // namespace dcf
