#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieframe/curvature.hpp"
#include "lieframe/exterior.hpp"
#include "lieframe/liealg.hpp"

namespace lieframe {

struct ContactStructure {
  StructureConstants sc;
  FrameMetric m;
  int orientation = 1;
  Vec alpha;
  int epsilon = 0;

  Form alpha_form() const { return Form::one_form(alpha); }
  Vec xi() const;
  int s_g() const { return m.s_g(); }
};

// Residual of ∗α − 𝔰_g dα under the given orientation.
double contact_residual(const StructureConstants& sc, const FrameMetric& m, int orientation,
                        const Vec& alpha);

// Verifies ∗α = 𝔰_g dα and |α|² ∈ {−1, 0, +1}; throws NotContact.
ContactStructure check_contact(const StructureConstants& sc, const FrameMetric& m, int orientation,
                               const Vec& alpha, double tol);
ContactStructure check_contact(const StructureConstants& sc, const FrameMetric& m, int orientation,
                               const Vec& alpha);

Mat characteristic_endo(const ContactStructure& cs);

struct HTensor {
  Mat h;
  std::optional<double> mu;  // set when ε = 0: 𝔥 = μ ξ⊗α
};

HTensor h_tensor(const ContactStructure& cs, double tol);
HTensor h_tensor(const ContactStructure& cs);
Mat tau_endo(const ContactStructure& cs);

struct ContactFrame {
  Vec xi, u, phi_u;
};

ContactFrame contact_frame(const ContactStructure& cs);

bool is_sasakian(const ContactStructure& cs, double tol);
bool is_sasakian(const ContactStructure& cs);

struct KContactReport {
  bool k_contact = false;
  double witness = 0;       // max |(𝓛_ξ g)(e_i, e_j)|
  double null_witness = 0;  // g([ξ,u],u) in the light-cone frame, ε = 0 only
};

KContactReport k_contact(const ContactStructure& cs, double tol);
KContactReport k_contact(const ContactStructure& cs);

struct NijenhuisReport {
  double max_abs = 0;
  bool ker_involutive = false;
  double ker_defect = 0;
};

// J on 𝔤 ⊕ ℝ∂_q with J(v, c∂_q) = (φ(v) + cξ, α(v)∂_q). Requires ε = 0.
Mat j_endo(const ContactStructure& cs);
NijenhuisReport nijenhuis_J(const ContactStructure& cs, double tol);
NijenhuisReport nijenhuis_J(const ContactStructure& cs);

// 𝔩(v) = R(v, ξ)ξ
Mat l_endo(const ContactStructure& cs, const CurvatureTensors& curv);
// v ↦ ∇_v ξ
Mat nabla_xi(const ContactStructure& cs, const ConnectionCoeffs& conn);

struct SpecialFrame {
  Vec xi, X, phi_X;
  double mu = 0;
};

// Orthonormal frame with 𝔥(X) = μX for time-like εη-Einstein structures.
SpecialFrame timelike_special_frame(const ContactStructure& cs, double tol);
SpecialFrame timelike_special_frame(const ContactStructure& cs);

struct IdentityCheck {
  std::string name;
  double residual = 0;
};

// Structural identities satisfied by every ε-contact metric structure.
std::vector<IdentityCheck> contact_identities(const ContactStructure& cs);

// Matrix of the one-form applied column-wise: (ξ⊗α)(v) = α(v) ξ.
Mat outer_endo(const Vec& v, const Vec& covector);

}  // namespace lieframe
