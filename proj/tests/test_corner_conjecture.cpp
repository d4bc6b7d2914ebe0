#include <doctest.h>

#include <chrono>
#include <map>
#include <vector>

#include "bei/conjecture.hpp"
#include "bei/corner.hpp"
#include "bei/lcm_lattice.hpp"
#include "bei/render.hpp"

using namespace bei;

TEST_CASE("mapping-cone corner certificates for cycles") {
  for (int n = 4; n <= 10; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const CornerCertificate cert = cycle_corner_betti(n);
    const auto elapsed = std::chrono::steady_clock::now() - t0;
    CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() < 1000);

    CHECK(cert.n == n);
    CHECK(cert.corner_value == binomial_coefficient(n - 1, 2) - 1);
    CHECK(cert.base_colon_quadrics == n - 3);
    CHECK(cert.base_colon_variables == 2);
    CHECK(cert.base_projdim == n - 1);
    CHECK(cert.base_corner_entry == 0);
    CHECK(is_monomial_regular_sequence(cert.base_colon.gens));

    REQUIRE(static_cast<long long>(cert.steps.size()) == static_cast<long long>(n) * (n - 3) / 2);
    long long expect_total = 0;
    for (const CornerStep& s : cert.steps) {
      CHECK(is_monomial_regular_sequence(s.colon_ideal.gens));
      CHECK(s.quadric_count + s.variable_count == n - 1);
      CHECK(s.quadric_count == s.j - s.i - 2);
      CHECK(s.variable_count == n - s.j + s.i + 1);
      CHECK(s.shifted_top_degree == 2 * n - 2);
      ++expect_total;
      CHECK(s.running_total == expect_total);
    }
  }
  CHECK_THROWS_AS(cycle_corner_betti(3), Error);
}

TEST_CASE("the n=4 certificate in full") {
  const CornerCertificate cert = cycle_corner_betti(4);
  CHECK(cert.base_colon.str() == "(x3, y2, x2*y3)");
  REQUIRE(cert.steps.size() == 2);
  CHECK(cert.steps[0].v.str() == "x1*x4*y3");
  CHECK(cert.steps[0].colon_ideal.str() == "(x2, y2, y4)");
  CHECK(cert.steps[1].v.str() == "x2*y1*y4");
  CHECK(cert.steps[1].colon_ideal.str() == "(x1, x3, y3)");
  CHECK(cert.corner_value == 2);
}

TEST_CASE("the certificate value matches the lattice oracle") {
  for (int n = 4; n <= 6; ++n)
    CHECK(cycle_corner_betti(n).corner_value ==
          lcm_lattice_betti(initial_ideal(make_cycle(n))).at(n, 2 * n - 2));
}

TEST_CASE("conjecture holds on the small instances") {
  SUBCASE("C_4") {
    const ConjectureReport rep = check_conjecture(make_cycle(4));
    CHECK(rep.verdict == ConjectureReport::Verdict::equal);
    CHECK(rep.semicontinuity_ok);
    REQUIRE(rep.initial_extremal.size() == 1);
    CHECK(rep.initial_extremal[0] == ExtremalEntry{4, 6, 2});
    CHECK(rep.binomial_extremal == rep.initial_extremal);
    CHECK_FALSE(rep.adjudication.applicable);
  }
  SUBCASE("K_{2,1} and K_{3,1}") {
    const ConjectureReport k21 = check_conjecture_kmn(2, 1);
    CHECK(k21.verdict == ConjectureReport::Verdict::equal);
    REQUIRE(k21.binomial_extremal.size() == 1);
    CHECK(k21.binomial_extremal[0] == ExtremalEntry{2, 4, 1});
    CHECK_FALSE(k21.adjudication.applicable);

    const ConjectureReport k31 = check_conjecture_kmn(3, 1);
    CHECK(k31.verdict == ConjectureReport::Verdict::equal);
    REQUIRE(k31.initial_extremal.size() == 1);
    CHECK(k31.initial_extremal[0] == ExtremalEntry{3, 5, 2});
    CHECK(k31.binomial_extremal == k31.initial_extremal);
  }
  SUBCASE("C_5 needs raised caps") {
    OracleConfig cfg;
    cfg.spot_cap = 50000;
    const ConjectureReport rep = check_conjecture(make_cycle(5), cfg);
    CHECK(rep.verdict == ConjectureReport::Verdict::equal);
    REQUIRE(rep.initial_extremal.size() == 1);
    CHECK(rep.initial_extremal[0] == ExtremalEntry{5, 8, 5});
    CHECK(rep.binomial_extremal == rep.initial_extremal);
    CHECK(rep.semicontinuity_ok);
  }
  SUBCASE("edgeless graphs are trivially equal") {
    const ConjectureReport rep = check_conjecture(make_graph(3, {}));
    CHECK(rep.verdict == ConjectureReport::Verdict::equal);
    CHECK(rep.initial_table.entries.size() == 1);
    CHECK(rep.binomial_table.at(0, 0) == 1);
  }
}

TEST_CASE("the K_{2,2} adjudication record") {
  const ConjectureReport rep = check_conjecture_kmn(2, 2);
  CHECK(rep.verdict == ConjectureReport::Verdict::equal);
  REQUIRE(rep.adjudication.applicable);
  CHECK(rep.adjudication.corner_i == 4);
  CHECK(rep.adjudication.corner_j == 6);
  CHECK(rep.adjudication.closed_form_value == 2);
  CHECK(rep.adjudication.published_value == 1);
  CHECK(rep.adjudication.oracle_value == 2);
  CHECK(rep.adjudication.sides_with == "closed form");
  // the conjecture itself holds: both corners are ((4,6), 2)
  REQUIRE(rep.binomial_extremal.size() == 1);
  CHECK(rep.binomial_extremal[0] == ExtremalEntry{4, 6, 2});
}

TEST_CASE("cap refusals turn into undecided verdicts naming the blocking spot") {
  const ConjectureReport rep = check_conjecture(make_cycle(5));  // default 20000 cap
  CHECK(rep.verdict == ConjectureReport::Verdict::undecided);
  CHECK_FALSE(rep.decided());
  CHECK(rep.undecided_reason.find("binomial side") != std::string::npos);
  CHECK(rep.undecided_reason.find("(3,6)") != std::string::npos);
  CHECK(rep.undecided_reason.find("20400") != std::string::npos);
  CHECK(rep.binomial_table.entries.empty());
  // the initial side stays available
  CHECK(rep.initial_table.at(5, 8) == 5);

  OracleConfig strangled;
  strangled.lattice_cap = 1;
  const ConjectureReport rep2 = check_conjecture(make_cycle(4), strangled);
  CHECK(rep2.verdict == ConjectureReport::Verdict::undecided);
  CHECK(rep2.undecided_reason.find("initial side") != std::string::npos);
}

TEST_CASE("json tables round-trip") {
  const BettiTable total = lcm_lattice_betti(initial_ideal(make_cycle(4)));
  const BettiTable back = parse_betti_json(render_betti_json(total));
  CHECK(back.subject == total.subject);
  CHECK(back.bounded == total.bounded);
  CHECK(back.entries == total.entries);

  BettiTable bounded;
  bounded.subject = "S/J";
  bounded.bounded = true;
  bounded.i_max = 3;
  bounded.j_max = 5;
  bounded.add(0, 0, 1);
  bounded.add(1, 2, 4);
  const BettiTable b2 = parse_betti_json(render_betti_json(bounded));
  CHECK(b2.bounded);
  CHECK(b2.i_max == 3);
  CHECK(b2.j_max == 5);
  CHECK(b2.entries == bounded.entries);
}

TEST_CASE("text and csv rendering") {
  const BettiTable t = lcm_lattice_betti(initial_ideal(make_cycle(4)));
  const std::string text = render_betti_text(t);
  CHECK(text.find("projdim: 4") != std::string::npos);
  CHECK(text.find("reg: 2") != std::string::npos);
  CHECK(text.find("extremal: (4,6)=2") != std::string::npos);
  CHECK(text.find("total:") != std::string::npos);

  const std::string csv = render_betti_csv(t);
  CHECK(csv.rfind("subject,i,j,value\n", 0) == 0);
  size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == t.entries.size() + 1);

  BettiTable bounded;
  bounded.subject = "S/J";
  bounded.bounded = true;
  bounded.i_max = 1;
  bounded.j_max = 2;
  bounded.add(0, 0, 1);
  bounded.add(1, 2, 2);
  const std::string btext = render_betti_text(bounded);
  CHECK(btext.find("certified region: i <= 1, j <= 2") != std::string::npos);
  CHECK(btext.find("projdim") == std::string::npos);
}

TEST_CASE("report rendering") {
  const ConjectureReport rep = check_conjecture_kmn(2, 2);
  const std::string text = render_conjecture(rep, OutputFormat::text);
  CHECK(text.find("verdict: equal") != std::string::npos);
  CHECK(text.find("published value: 1") != std::string::npos);
  CHECK(text.find("oracle sides with: closed form") != std::string::npos);
  const std::string json = render_conjecture(rep, OutputFormat::json);
  CHECK(json.find("\"verdict\": \"equal\"") != std::string::npos);
  CHECK(json.find("\"sides_with\": \"closed form\"") != std::string::npos);
  CHECK_THROWS_AS(render_conjecture(rep, OutputFormat::csv), Error);

  const CornerCertificate cert = cycle_corner_betti(4);
  const std::string ctext = render_corner(cert, OutputFormat::text);
  CHECK(ctext.find("corner: (4,6) = 2") != std::string::npos);
  CHECK(render_corner(cert, OutputFormat::json).find("\"value\": 2") != std::string::npos);
  CHECK_THROWS_AS(render_corner(cert, OutputFormat::csv), Error);

  const VerifyReport vr = verify_groebner(make_cycle(4));
  CHECK(render_verify(vr, OutputFormat::text).find("result: pass") != std::string::npos);
  CHECK(render_verify(vr, OutputFormat::json).find("\"pass\": true") != std::string::npos);
}

TEST_CASE("output format parsing") {
  CHECK(parse_output_format("text") == OutputFormat::text);
  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK_THROWS_WITH_AS(parse_output_format("yaml"), doctest::Contains("yaml"), Error);
}
