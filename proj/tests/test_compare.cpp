#include "doctest.h"

#include <string>
#include <utility>
#include <vector>

#include "sbvr2ocl/compare.hpp"
#include "sbvr2ocl/mapper.hpp"
#include "sbvr2ocl/ocl_printer.hpp"

#include "test_util.hpp"

using namespace sbvr2ocl;

namespace {

// One term, one characteristic: the whole bound-1 space is small enough to
// tally by hand.
// With missing values allowed it holds four snapshots: no thing at all,
// and one thing with big = true / false / absent.
struct Tiny {
    Vocabulary v = testutil::load_vocab("term thing plural things\n"
                                        "characteristic thing is big\n");
    ClassModel m = testutil::derive_model(v);

    std::pair<SbvrRule, OclConstraint> pair_of(const std::string& sentence) {
        SbvrRule r = testutil::parse_one(sentence, v);
        return {r, testutil::map_one(sentence, v, m)};
    }

    EnumOptions partial_bound1() {
        EnumOptions o;
        o.max_per_class = 1;
        o.include_missing = true;
        return o;
    }
};

} // namespace

TEST_CASE("semantic comparison tallies every snapshot against every invariant") {
    Tiny t;
    auto all_big = t.pair_of("It is necessary that each thing is big.");
    auto none_big = t.pair_of("It is impossible that some thing is big.");
    REQUIRE(print_constraint(all_big.second) == "context Thing\ninv rule_1: self.big");
    REQUIRE(print_constraint(none_big.second) == "context Thing\ninv rule_1: not self.big");

    CompareResult r =
        compare_semantics({all_big, none_big}, t.v, t.m, t.partial_bound1());
    REQUIRE(r.ok());
    // Per snapshot: empty extent and defined values agree; the absent value
    // sends each constraint undefined while the rules totalize to false and
    // true respectively.
    CHECK(r.summary.snapshots == 4);
    CHECK(r.summary.evaluations == 8);
    CHECK(r.summary.agreements == 6);
    CHECK(r.summary.defined_disagreements == 0);
    CHECK(r.summary.sbvr_false_ocl_undefined == 1);
    CHECK(r.summary.sbvr_true_ocl_undefined == 1);
    CHECK(r.summary.undefined() == 2);
}

TEST_CASE("a wrong translation shows up as defined disagreements") {
    Tiny t;
    auto all_big = t.pair_of("It is necessary that each thing is big.");
    auto none_big = t.pair_of("It is impossible that some thing is big.");
    // Deliberately pair the rule with the other rule's constraint.
    std::pair<SbvrRule, OclConstraint> wrong{all_big.first, none_big.second};

    EnumOptions complete;
    complete.max_per_class = 1; // empty, big = true, big = false
    CompareResult r = compare_semantics({wrong}, t.v, t.m, complete);
    REQUIRE(r.ok());
    CHECK(r.summary.snapshots == 3);
    CHECK(r.summary.evaluations == 3);
    CHECK(r.summary.agreements == 1); // both vacuously satisfied when nothing exists
    CHECK(r.summary.defined_disagreements == 2);
    CHECK(r.summary.undefined() == 0);
}

TEST_CASE("pre and post constraints are skipped: they have no snapshot semantics") {
    Tiny t;
    auto pair = t.pair_of("It is necessary that each thing is big.");
    pair.second.kind = ConstraintKind::Post;

    EnumOptions complete;
    complete.max_per_class = 1;
    CompareResult r = compare_semantics({pair}, t.v, t.m, complete);
    REQUIRE(r.ok());
    CHECK(r.summary.snapshots == 3); // still enumerated
    CHECK(r.summary.evaluations == 0);
    CHECK(r.summary.agreements == 0);
}

TEST_CASE("an oversized space is refused before any evaluation") {
    Tiny t;
    EnumOptions o = t.partial_bound1();
    o.cap = 2; // the space holds 4
    auto pair = t.pair_of("It is necessary that each thing is big.");

    CompareResult r = compare_semantics({pair}, t.v, t.m, o);
    CHECK_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics.front().code == "E_TOO_LARGE");
    CHECK(r.summary.snapshots == 0);
    CHECK(r.summary.evaluations == 0);
}

TEST_CASE("the row callback sees evaluations in enumeration order, pairs in order") {
    Tiny t;
    auto all_big = t.pair_of("It is necessary that each thing is big.");
    auto none_big = t.pair_of("It is impossible that some thing is big.");

    struct Row {
        std::string snap;
        std::string constraint;
        bool sbvr;
        TruthValue3 ocl;
    };
    std::vector<Row> rows;
    CompareResult r = compare_semantics(
        {all_big, none_big}, t.v, t.m, t.partial_bound1(),
        [&](const SbvrRule&, const OclConstraint& c, const Snapshot& s, bool sbvr,
            TruthValue3 ocl) {
            rows.push_back({print_snapshot(s, t.v), print_constraint(c), sbvr, ocl});
        });
    REQUIRE(r.ok());
    REQUIRE(rows.size() == r.summary.evaluations);

    // First snapshot is the empty one; within it the pairs come in call order.
    CHECK(rows[0].snap == "");
    CHECK(rows[0].constraint == "context Thing\ninv rule_1: self.big");
    CHECK(rows[1].snap == "");
    CHECK(rows[1].constraint == "context Thing\ninv rule_1: not self.big");
    CHECK(rows[0].sbvr == true); // vacuous
    CHECK(rows[0].ocl == TruthValue3::True);

    // Exactly one row pairs a false rule with an undefined constraint, and
    // it is the universal rule on the snapshot whose value is absent.
    int witnesses = 0;
    for (const auto& row : rows)
        if (!row.sbvr && row.ocl == TruthValue3::Undefined) {
            ++witnesses;
            CHECK(row.constraint == "context Thing\ninv rule_1: self.big");
            CHECK(row.snap.find("big = missing") != std::string::npos);
        }
    CHECK(witnesses == 1);
}
