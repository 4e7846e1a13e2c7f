#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "aring/report_io.hpp"
#include "aring/verify.hpp"

using namespace aring;

TEST_CASE("jsonl and csv report serialization") {
    GregoryCache cache;
    Report r = verify_lemma3(PrimeWindow(3, 30), cache);
    std::string jsonl = report_to_jsonl(r);
    std::string again = report_to_jsonl(r);
    CHECK(jsonl == again);
    CHECK(jsonl.find("\"statement_id\":\"lemma3\"") != std::string::npos);
    CHECK(jsonl.find("\"verdict\":\"PASS\"") != std::string::npos);
    CHECK(jsonl.find("\"summary\"") != std::string::npos);

    std::string csv = report_to_csv(r);
    CHECK(csv.rfind("statement_id,p,params,lhs,rhs,verdict\n", 0) == 0);
    CHECK(csv.find("lemma3,3,") != std::string::npos);
}

TEST_CASE("element serialization") {
    PrimeWindow w(2, 12);
    AElement e = embed(Rational(1, 6), w);
    std::string jsonl = element_to_jsonl(e);
    CHECK(jsonl.find("{\"label\":\"1/6\",\"p\":5,\"residue\":1}") != std::string::npos);
    CHECK(jsonl.find("\"p\":2") == std::string::npos);  // excluded prime
    std::string csv = element_to_csv(e);
    CHECK(csv.rfind("label,p,residue\n", 0) == 0);
    CHECK(csv.find("1/6,7,6") != std::string::npos);
}

TEST_CASE("gregory cache round trip with version invalidation") {
    const std::string path = "test_cache_roundtrip.jsonl";
    {
        GregoryCache cache;
        cache.get(11);
        cache.get(13);
        save_gregory_cache(path, cache);
    }
    auto loaded = load_gregory_cache(path);
    REQUIRE(loaded.size() == 2);
    GregoryResidues direct = gregory_mod_p(11);
    CHECK(loaded.at(11).abs_g == direct.abs_g);
    CHECK(loaded.at(11).regularized_tail == direct.regularized_tail);

    // A foreign schema version must be ignored.
    {
        std::ofstream f(path, std::ios::app);
        f << "{\"quantity\":\"gregory_residues\",\"p\":17,\"schema_version\":999,"
             "\"abs_g\":[0,1],\"tail\":0}\n";
    }
    auto reloaded = load_gregory_cache(path);
    CHECK(reloaded.size() == 2);
    CHECK(reloaded.count(17) == 0);
    std::remove(path.c_str());
}

TEST_CASE("missing cache file loads empty") {
    CHECK(load_gregory_cache("does_not_exist_12345.jsonl").empty());
}

TEST_CASE("failing records serialize with complete evidence") {
    Report r;
    VerificationRecord rec;
    rec.statement_id = "demo";
    rec.prime = 11;
    rec.params = {{"k", 3}};
    rec.lhs = "4";
    rec.rhs = "5";
    rec.pass = false;
    r.records.push_back(rec);
    r.finalize();
    CHECK(!r.all_pass());
    CHECK(r.fail_count() == 1);
    CHECK(r.summary.at("demo").fail == 1);
    std::string jsonl = report_to_jsonl(r);
    CHECK(jsonl.find("\"p\":11") != std::string::npos);
    CHECK(jsonl.find("\"params\":{\"k\":3}") != std::string::npos);
    CHECK(jsonl.find("\"lhs\":\"4\"") != std::string::npos);
    CHECK(jsonl.find("\"rhs\":\"5\"") != std::string::npos);
    CHECK(jsonl.find("\"verdict\":\"FAIL\"") != std::string::npos);
    std::string csv = report_to_csv(r);
    CHECK(csv.find("demo,11,k=3,4,5,FAIL") != std::string::npos);
}
