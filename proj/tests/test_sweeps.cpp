#include <doctest.h>

#include "helpers.hpp"
#include "lact/sweeps.hpp"

using namespace lact;
using namespace lact::testing;

// Every kernel must give the same answer serial and parallel, and the same
// answer on repeated runs with one seed.

TEST_CASE("cocycle sweep: serial equals parallel") {
  auto pair = pair_a3_s3();
  auto serial = cocycle_sweep_serial(pair, 50, 2, 4, 99);
  auto parallel = cocycle_sweep_parallel(pair, 50, 2, 4, 99);
  CHECK(serial == parallel);
  CHECK(serial.violations == 0);
  CHECK(serial.samples == 50);
  CHECK(serial.checks > 0);
  CHECK(cocycle_sweep_serial(pair, 50, 2, 4, 99) == serial);
}

TEST_CASE("constancy sweep: serial equals parallel") {
  auto pair = pair_r2_transitive();
  auto serial = constancy_sweep_serial(pair, 60, 2, 4, 5);
  auto parallel = constancy_sweep_parallel(pair, 60, 2, 4, 5);
  CHECK(serial == parallel);
  CHECK(serial.violations == 0);
}

TEST_CASE("quotient action sweep: serial equals parallel") {
  auto pair = pair_r2_intransitive();
  auto serial = quotient_action_sweep_serial(pair, 25, 2, 3, 7);
  auto parallel = quotient_action_sweep_parallel(pair, 25, 2, 3, 7);
  CHECK(serial == parallel);
  CHECK(serial.violations == 0);
}

TEST_CASE("kernel agreement sweep: serial equals parallel") {
  auto pair = pair_r2_transitive();
  auto serial = kernel_agreement_sweep_serial(pair, 40, 2, 31);
  auto parallel = kernel_agreement_sweep_parallel(pair, 40, 2, 31);
  CHECK(serial == parallel);
  CHECK(serial.violations == 0);
}

TEST_CASE("palindrome audit: serial equals parallel") {
  for (int r : {2, 3}) {
    auto serial = palindrome_audit_serial(r, 8);
    auto parallel = palindrome_audit_parallel(r, 8);
    CHECK(serial == parallel);
    CHECK(serial.implication_violations == 0);
    CHECK(serial.converse_failures > 0);
  }
}

TEST_CASE("wandering scan: serial equals parallel and matches the direct check") {
  auto pair = pair_a3_s3();
  TreeAut a = compose(L(pair, "01"), L(pair, "01"));
  TreeAut b = compose(L(pair, "12"), L(pair, "12"));
  auto outcome = pingpong_certify(a, b, cylinder(Vertex::parse("10", 3)),
                                  cylinder(Vertex::parse("01", 3)),
                                  cylinder(Vertex::parse("21", 3)),
                                  cylinder(Vertex::parse("12", 3)));
  REQUIRE(outcome.ok());
  HalfTree omega = cylinder(Vertex::parse("20", 3));
  bool serial = wandering_scan_serial(*outcome.certificate, omega, 3);
  bool parallel = wandering_scan_parallel(*outcome.certificate, omega, 3);
  CHECK(serial == parallel);
  CHECK(serial == wandering_brute_check(*outcome.certificate, omega, 3));
  CHECK(serial);

  // a non-wandering candidate is caught the same way in both variants
  HalfTree bad = cylinder(Vertex::parse("01", 3));
  CHECK(wandering_scan_serial(*outcome.certificate, bad, 2) ==
        wandering_scan_parallel(*outcome.certificate, bad, 2));
  CHECK(!wandering_scan_serial(*outcome.certificate, bad, 2));
}
