// A tour of the GL_4 and GL_6 examples: strata, one refinement end to end,
// the slope audit, the zeta support verdict and an M_tau table.

#include <pspin/pspin.hpp>

#include <iostream>

using namespace pspin;

int main() {
  std::cout << "== optimal spin parabolics for GL_4 ==\n";
  for (const auto& s : stratify(2)) {
    std::cout << s.parabolic.label() << " (dim " << pure_parabolic_dim(s.parabolic) << "):";
    for (const auto& r : s.members) std::cout << ' ' << r.to_string();
    std::cout << '\n';
  }

  const auto r = Refinement::parse("216345");
  const auto prof = optimal_parabolic(r);
  std::cout << "\n== " << r.to_string() << " ==\n"
            << "spin set " << format_set(prof.spin_set) << ", optimally " << prof.optimal.label() << "-spin\n";
  for (int k = 1; k <= 2 * r.rank(); ++k) std::cout << "  α(U_" << k << ") = " << alpha_U(r, k).to_string() << '\n';

  const auto path = to_B_spin(r);
  std::cout << "switch to " << path.result.to_string() << " via";
  for (auto [i, j] : path.tau) std::cout << " (" << i << ' ' << j << ')';
  std::cout << '\n';
  const PureWeight lambda{9, 5, 2, -2, -5, -9};
  const auto phi = phi_tau(path.tau, lambda);
  for (int k = 1; k <= 6; ++k) {
    const bool agrees = evaluate(phi.image(k), path.result, lambda) == alpha_U_circ(r, k, lambda);
    std::cout << "  φ_τ(U°_" << k << ") = " << phi.image(k).to_string() << (agrees ? "" : "  MISMATCH") << '\n';
  }

  std::cout << "\n== GL_4 slopes at λ = (12,1,-1,-12) ==\n";
  const PureWeight gl4{12, 1, -1, -12};
  const std::vector<SlopeData> data{{Refinement::parse("1234"), {{1, 11}, {2, 0}, {3, 11}}},
                                    {Refinement::parse("2134"), {{1, 11}, {2, 0}, {3, 1}}}};
  for (const auto& d : data) {
    const auto audit = non_critical_slope(d.slopes, gl4, SpinParabolic::borel(2));
    std::cout << d.refinement.to_string() << ':';
    for (const auto& row : audit.rows) std::cout << "  " << to_string(row.slope) << " < " << row.bound;
    std::cout << (audit.non_critical ? "  non-critical\n" : "  critical\n");
  }
  const auto sol = solve_profile(data, gl4);
  std::cout << "joint profile: " << (sol.consistent ? "consistent" : "inconsistent, conflicting rows:");
  for (const auto& v : sol.violated) std::cout << ' ' << v;
  std::cout << '\n';

  std::cout << "\n== zeta supports, n = 2 ==\n";
  for (const auto& p : all_spin_parabolics(2)) {
    const auto v = zeta_support_verdict(p, 1);
    std::cout << p.label() << ": " << (v.forced_vanishing ? "forced vanishing" : "ok") << '\n';
  }

  std::cout << "\n== M_τ for n = 2, P = B ==\n";
  const auto m = m_tau_expansion(2, SpinParabolic::borel(2));
  for (const auto& [x, c] : m.normalized) std::cout << x.to_string() << "  " << c.to_string() << '\n';
}
