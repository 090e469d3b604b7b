#include "lieframe/contact.hpp"

#include "lieframe/errors.hpp"
#include "support.hpp"

using namespace lieframe;
using namespace lieframe::test;

namespace {

// 𝓛_ξφ straight from brackets: v ↦ [ξ, φv] − φ[ξ, v].
Mat lie_derivative_phi(const ContactStructure& cs) {
  Mat phi = characteristic_endo(cs);
  Mat ad = cs.sc.ad(cs.xi());
  return ad * phi - phi * ad;
}

// (𝓛_ξg)(u,v) = −g([ξ,u],v) − g(u,[ξ,v])
Mat lie_derivative_metric(const ContactStructure& cs) {
  Mat ad = cs.sc.ad(cs.xi());
  Mat g = cs.m.matrix();
  return -(ad.transpose() * g + g * ad);
}

std::vector<ContactStructure> table_structures() {
  std::vector<ContactStructure> out;
  for (Classification c : all_classifications())
    for (const RowInstance& inst : table_instances(c)) {
      TableRowReport r = verify_table_row(inst, kTol);
      if (r.structure) out.push_back(*r.structure);
    }
  return out;
}

const std::vector<ContactStructure>& structures() {
  static const std::vector<ContactStructure> all = table_structures();
  return all;
}

}  // namespace

TEST_SUITE("contact") {
  TEST_CASE("causal type of the Reeb field") {
    CHECK(lorentzian(g3(1, 1, 1), vec3(1, 0, 0), 1).epsilon == -1);
    CHECK(lorentzian(g3(1, 1, 1), vec3(1, 1, 0), 1).epsilon == 0);
    CHECK(riemannian(su2(1, 1, 1), vec3(1, 0, 0), -1).epsilon == 1);
    CHECK_THROWS_AS(check_contact(StructureConstants(3), FrameMetric::lorentzian(3), 1, vec3(1, 0, 0), kTol),
                    NotContact);
    try {
      check_contact(StructureConstants(3), FrameMetric::lorentzian(3), 1, vec3(1, 0, 0), kTol);
    } catch (const NotContact& e) {
      CHECK(e.residual() > 0.5);
    }
  }

  TEST_CASE("the h tensor") {
    HTensor h = h_tensor(lorentzian(g3(1, 1, 1), vec3(1, 1, 0), 1));
    CHECK(max_abs(h.h) <= 1e-15);
    REQUIRE(h.mu);
    CHECK(*h.mu == 0);

    ContactStructure cs = lorentzian(g3(2, 1, 1), vec3(1, 0, 1), 1);
    CHECK(cs.epsilon == 0);
    HTensor h2 = h_tensor(cs);
    REQUIRE(h2.mu);
    CHECK(*h2.mu == doctest::Approx(1.0));
    CHECK(max_abs(Mat(h2.h - outer_endo(cs.xi(), cs.alpha))) <= 1e-14);
    CHECK(max_abs(Mat(h2.h - lie_derivative_phi(cs))) <= 1e-14);

    CHECK(max_abs(h_tensor(lorentzian(g3(1, 1, 1), vec3(1, 0, 0), 1)).h) <= 1e-15);
  }

  TEST_CASE("Sasakian versus K-contact in the null case") {
    const double a = 1, alpha0 = 2;
    ContactStructure cs = lorentzian(spec(Family::g1, {{"a", a}, {"b", 1}}), vec3(alpha0, 0, -alpha0), 1);
    CHECK(cs.epsilon == 0);
    CHECK(is_sasakian(cs));
    KContactReport k = k_contact(cs);
    CHECK_FALSE(k.k_contact);
    CHECK(std::abs(k.null_witness) == doctest::Approx(a / alpha0));
    CHECK(nijenhuis_J(cs).max_abs <= 1e-14);

    ContactStructure g3null = lorentzian(g3(1, 1, 1), vec3(1, 1, 0), 1);
    CHECK(is_sasakian(g3null));
    CHECK(k_contact(g3null).k_contact);
    CHECK(nijenhuis_J(g3null).max_abs <= 1e-14);

    CHECK(is_sasakian(riemannian(su2(1, 1, 1), vec3(1, 0, 0), -1)));
  }

  TEST_CASE("non-Sasakian null structure has non-integrable J") {
    // a = 0, μc = b − s with s = μ = 1
    ContactStructure cs = lorentzian(spec(Family::g2, {{"a", 0}, {"b", 2}, {"c", 1}}), vec3(1, 0, 1), 1);
    CHECK(cs.epsilon == 0);
    CHECK_FALSE(is_sasakian(cs));
    NijenhuisReport n = nijenhuis_J(cs);
    CHECK(n.max_abs > 1e-3);
    CHECK(n.ker_involutive);
  }

  TEST_CASE("special frame needs a time-like Reeb field") {
    CHECK_THROWS_AS(timelike_special_frame(lorentzian(g3(1, 1, 1), vec3(1, 1, 0), 1)), WrongCausalType);
    SpecialFrame f = timelike_special_frame(lorentzian(g3(0.5, 0.5, 1), vec3(1, 0, 0), 1));
    CHECK(f.mu == doctest::Approx(0).epsilon(1e-12));
  }

  TEST_CASE("property: structural identities on every tabulated structure") {
    REQUIRE(structures().size() > 100);
    for (const auto& cs : structures()) {
      for (const auto& id : contact_identities(cs)) {
        CAPTURE(id.name);
        CHECK(id.residual <= kTol);
      }
      HTensor h = h_tensor(cs);
      CHECK(max_abs(Mat(h.h - lie_derivative_phi(cs))) <= 1e-10);
      Mat lg = lie_derivative_metric(cs);
      CHECK(k_contact(cs).witness == doctest::Approx(max_abs(lg)).epsilon(1e-12));
      CHECK(k_contact(cs).k_contact == (max_abs(lg) <= kTol));
      if (cs.epsilon != 0) CHECK(k_contact(cs).k_contact == is_sasakian(cs));
    }
  }

  TEST_CASE("property: null structures") {
    int sasakian = 0, other = 0;
    for (const auto& cs : structures()) {
      if (cs.epsilon != 0) continue;
      NijenhuisReport n = nijenhuis_J(cs);
      CHECK(n.ker_involutive);
      if (is_sasakian(cs)) {
        ++sasakian;
        CHECK(n.max_abs <= kTol);
      } else {
        ++other;
        CHECK(n.max_abs > kTol);
      }
      if (k_contact(cs).k_contact) CHECK(is_sasakian(cs));
      Mat phi = characteristic_endo(cs);
      CHECK(max_abs(Mat(phi * phi * phi)) <= 1e-10);
      CHECK(max_abs(tau_endo(cs)) <= 1e-10);
      ContactFrame f = contact_frame(cs);
      CHECK(std::abs(cs.m.inner(f.xi, f.xi)) <= 1e-12);
      CHECK(cs.m.inner(f.u, f.xi) == doctest::Approx(1.0));
      CHECK(std::abs(cs.m.inner(f.u, f.u)) <= 1e-12);
      CHECK(cs.m.inner(f.phi_u, f.phi_u) == doctest::Approx(1.0));
    }
    CHECK(sasakian > 0);
    CHECK(other > 0);
  }

  TEST_CASE("property: null K-contact structures from scans are Sasakian") {
    ScanGrid grid{-2, 2, 5};
    int k_count = 0;
    for (Family f : {Family::g1, Family::g2, Family::g3, Family::g4}) {
      ScanResult r = scan_family(f, grid, 0, kTol, 2);
      for (const ScanHit& h : r.contact) {
        ContactStructure cs = check_contact(make_family(h.spec), FrameMetric::lorentzian(3), h.orientation, h.alpha, kTol);
        if (k_contact(cs).k_contact) {
          ++k_count;
          CHECK(is_sasakian(cs));
        }
      }
    }
    CHECK(k_count > 0);
  }

  TEST_CASE("property: Sasakian criterion through Ric(ξ,ξ)") {
    for (const auto& cs : structures()) {
      if (cs.epsilon * cs.s_g() != 1) continue;
      CurvatureTensors t = curvature_of(cs.sc, cs.m);
      Vec xi = cs.xi();
      double ric = xi.dot(t.ricci * xi);
      CHECK(is_sasakian(cs) == (std::abs(ric - 0.5 * cs.s_g() * cs.epsilon) <= 1e-9));
    }
  }
}
