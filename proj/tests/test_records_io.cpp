#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hopfcoh/catalog.hpp"
#include "hopfcoh/datum_io.hpp"
#include "hopfcoh/records.hpp"
#include "hopfcoh/scalar_io.hpp"

using namespace hopfcoh;

#ifndef HOPFCOH_DATA_DIR
#define HOPFCOH_DATA_DIR "data"
#endif

namespace {

CartanDatum load_shipped(const std::string& name) {
  return load_datum(std::string(HOPFCOH_DATA_DIR) + "/" + name);
}

bool same_datum(const CartanDatum& a, const CartanDatum& b) {
  if (!(a.group.orders == b.group.orders && a.cartan.a == b.cartan.a && a.g == b.g &&
        a.chi == b.chi))
    return false;
  if (a.lambda.size() != b.lambda.size() || a.mu.size() != b.mu.size()) return false;
  for (const auto& [k, v] : a.lambda)
    if (!(b.lambda.count(k) && b.lambda.at(k) == v)) return false;
  for (const auto& [k, v] : a.mu)
    if (!(b.mu.count(k) && b.mu.at(k) == v)) return false;
  return true;
}

}  // namespace

TEST_SUITE("records_io") {
  TEST_CASE("records round trip") {
    std::vector<Record> recs = {
        {{"record", "ext"}, {"n", "2"}, {"dim", "3"}},
        {{"record", "relation"}, {"scalar", "3*zeta(12)^5-1/2"}, {"rhs", "xi[a1]"}},
    };
    std::vector<Record> back = parse_records(render_records(recs));
    REQUIRE(back.size() == recs.size());
    CHECK(back == recs);
    // scalar values survive the grammar round trip
    CHECK(parse_scalar(back[1][1].second) == parse_scalar("3*zeta(12)^5 - 1/2"));
  }

  TEST_CASE("tables render one group per record kind") {
    std::vector<Record> recs = {
        {{"record", "root"}, {"index", "1"}, {"N", "2"}},
        {{"record", "root"}, {"index", "2"}, {"N", "3"}},
        {{"record", "summary"}, {"odd_invariant", "none"}},
    };
    std::string table = render_table(recs);
    CHECK(table.find("== root ==") != std::string::npos);
    CHECK(table.find("== summary ==") != std::string::npos);
  }

  TEST_CASE("shipped datum files match the built-in catalog") {
    CHECK(same_datum(load_shipped("sweedler.datum"), catalog::sweedler()));
    CHECK(same_datum(load_shipped("qci_2_3.datum"), catalog::qci_2_3()));
    CHECK(same_datum(load_shipped("a1a1_z2.datum"), catalog::a1a1_z2()));
    CHECK(same_datum(load_shipped("a1cubed_l3.datum"), catalog::a1cubed(3)));
    CHECK(same_datum(load_shipped("a1cubed_l5.datum"), catalog::a1cubed(5)));
    CHECK(same_datum(load_shipped("a1cubed_l7.datum"), catalog::a1cubed(7)));
    CHECK(same_datum(load_shipped("a2xa1_l3.datum"), catalog::a2xa1(3)));
    CHECK(same_datum(load_shipped("uqsl2_l3.datum"), catalog::uq_sl2_datum(3)));
  }

  TEST_CASE("the B2 datum validates and has four convex positive roots") {
    CartanDatum d = load_shipped("b2_l5.datum");
    CHECK(validate(d).ok());
    auto roots = positive_roots(d.cartan);
    REQUIRE(roots.size() == 4);
    for (const Root& r : roots) CHECK(root_data(d, r).N_alpha == 5);
  }

  TEST_CASE("the broken shipped datum fails on the Cartan condition") {
    CartanDatum d = load_shipped("bad_cartan.datum");
    ValidationReport rep = validate(d);
    CHECK(!rep.ok());
    CHECK(rep.first_failure().find("Cartan condition") != std::string::npos);
  }
}
