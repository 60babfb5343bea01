#include "doctest.h"

#include "sbvr2ocl/class_model.hpp"

#include "test_util.hpp"

using namespace sbvr2ocl;

TEST_CASE("class names are upper camel case") {
    CHECK(upper_camel_case("customer") == "Customer");
    CHECK(upper_camel_case("savings_account") == "SavingsAccount");
    CHECK(upper_camel_case("a") == "A");
}

TEST_CASE("bank vocabulary derives the expected class model") {
    Vocabulary v = testutil::bank_vocab();
    ClassModel m = testutil::derive_model(v);

    CHECK(dump_class_model(m) == "class Customer\n"
                                 "  attr name : String\n"
                                 "  attr gold : Boolean (characteristic)\n"
                                 "  end account : Account [0..*]\n"
                                 "  end loan : Loan [0..*]\n"
                                 "  op opens(loan : Loan)\n"
                                 "class Account\n"
                                 "  end customer : Customer [1..1]\n"
                                 "class SavingsAccount : Account\n"
                                 "  attr balance : Integer\n"
                                 "class Loan\n"
                                 "  end customer : Customer [0..*]\n"
                                 "assoc Customer -> Account\n"
                                 "assoc Customer -> Loan\n");
}

TEST_CASE("member lookup follows generalization upward") {
    Vocabulary v = testutil::bank_vocab();
    ClassModel m = testutil::derive_model(v);

    // Own member.
    REQUIRE(m.find_attribute("SavingsAccount", "balance") != nullptr);
    CHECK(m.find_attribute("SavingsAccount", "balance")->type == ValueType::Integer);
    // Inherited member: the reverse end of `has` sits on Account.
    const AssociationEnd* end = m.find_end("SavingsAccount", "customer");
    REQUIRE(end != nullptr);
    CHECK(end->target == "Customer");
    CHECK_FALSE(end->forward);
    // Not visible downward.
    CHECK(m.find_attribute("Account", "balance") == nullptr);

    CHECK(m.conforms("SavingsAccount", "Account"));
    CHECK_FALSE(m.conforms("Account", "SavingsAccount"));
    CHECK(m.conforms("Customer", "Customer"));
}

TEST_CASE("characteristics become Boolean attributes") {
    Vocabulary v = testutil::bank_vocab();
    ClassModel m = testutil::derive_model(v);
    const UmlAttribute* gold = m.find_attribute("Customer", "gold");
    REQUIRE(gold != nullptr);
    CHECK(gold->type == ValueType::Boolean);
    CHECK(gold->from_characteristic);
}

TEST_CASE("action fact types become operations on the subject class") {
    Vocabulary v = testutil::bank_vocab();
    ClassModel m = testutil::derive_model(v);
    const UmlOperation* op = m.find_operation("Customer", "opens");
    REQUIRE(op != nullptr);
    REQUIRE(op->params.size() == 1);
    CHECK(op->params[0].name == "loan");
    CHECK(op->params[0].klass == "Loan");
    CHECK(v.fact_type(op->fact).verb_phrase == "opens");
    // The association for the action fact type still exists for navigation.
    CHECK(m.association_for(op->fact) != nullptr);
}

TEST_CASE("shared participant pairs get verb-suffixed role names") {
    Vocabulary v = testutil::load_vocab("term library\n"
                                        "term book\n"
                                        "fact library has book\n"
                                        "fact library lends book\n");
    ClassModel m = testutil::derive_model(v);

    CHECK(m.find_end("Library", "book_has") != nullptr);
    CHECK(m.find_end("Library", "book_lends") != nullptr);
    CHECK(m.find_end("Library", "book") == nullptr);
    CHECK(m.find_end("Book", "library_has") != nullptr);
    CHECK(m.find_end("Book", "library_lends") != nullptr);
}

TEST_CASE("a single fact type keeps the bare opposite-term role") {
    Vocabulary v = testutil::load_vocab("term library\n"
                                        "term book\n"
                                        "fact library has book\n");
    ClassModel m = testutil::derive_model(v);
    CHECK(m.find_end("Library", "book") != nullptr);
    CHECK(m.find_end("Book", "library") != nullptr);
}

TEST_CASE("partitive fact types derive composite associations") {
    Vocabulary v = testutil::load_vocab("term order\n"
                                        "term line_item\n"
                                        "fact order is-part-of line_item\n");
    // is-part-of: the subject is a part of the object.
    ClassModel m = testutil::derive_model(v);
    REQUIRE(m.associations.size() == 1);
    CHECK(m.associations[0].composite);
}

TEST_CASE("a member name clash is reported as E_NAME_CLASH") {
    auto vocab = load_vocabulary("term customer\n"
                                 "term account\n"
                                 "fact customer has account\n"
                                 "attribute customer . account : Integer\n");
    REQUIRE(vocab.ok());
    auto model = derive_class_model(*vocab.value);
    CHECK_FALSE(model.ok());
    REQUIRE(model.diagnostics.size() == 1);
    CHECK(model.diagnostics[0].code == "E_NAME_CLASH");
    CHECK(model.diagnostics[0].message.find("Customer") != std::string::npos);
    CHECK(model.diagnostics[0].message.find("account") != std::string::npos);
}

TEST_CASE("an inherited member clash is reported only on the subtype") {
    auto vocab = load_vocabulary("term account\n"
                                 "term savings_account\n"
                                 "fact savings_account is-category-of account\n"
                                 "attribute account . balance : Integer\n"
                                 "attribute savings_account . balance : Integer\n");
    REQUIRE(vocab.ok());
    auto model = derive_class_model(*vocab.value);
    CHECK_FALSE(model.ok());
    REQUIRE(model.diagnostics.size() == 1);
    CHECK(model.diagnostics[0].code == "E_NAME_CLASH");
    CHECK(model.diagnostics[0].message.find("SavingsAccount") != std::string::npos);
}
