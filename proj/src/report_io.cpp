#include "aring/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace aring {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const VerificationRecord& r) {
    ordered_json o;
    o["statement_id"] = r.statement_id;
    if (r.prime)
        o["p"] = *r.prime;
    else
        o["p"] = nullptr;
    o["params"] = ordered_json::object();
    for (const auto& [k, v] : r.params) o["params"][k] = v;
    o["lhs"] = r.lhs;
    o["rhs"] = r.rhs;
    o["verdict"] = r.pass ? "PASS" : "FAIL";
    return o;
}

std::string params_compact(const VerificationRecord& r) {
    std::string s;
    for (const auto& [k, v] : r.params) {
        if (!s.empty()) s += ';';
        s += k + "=" + std::to_string(v);
    }
    return s;
}

}  // namespace

std::string report_to_jsonl(const Report& report) {
    std::ostringstream out;
    for (const auto& r : report.records) out << record_json(r).dump() << '\n';
    ordered_json tail;
    tail["summary"] = ordered_json::object();
    for (const auto& [id, s] : report.summary) {
        tail["summary"][id] = ordered_json::object();
        tail["summary"][id]["pass"] = s.pass;
        tail["summary"][id]["fail"] = s.fail;
    }
    tail["environment"] = ordered_json::object();
    for (const auto& [k, v] : report.environment) tail["environment"][k] = v;
    tail["notes"] = report.notes;
    out << tail.dump() << '\n';
    return out.str();
}

std::string report_to_csv(const Report& report) {
    std::ostringstream out;
    out << "statement_id,p,params,lhs,rhs,verdict\n";
    for (const auto& r : report.records) {
        out << r.statement_id << ',';
        if (r.prime) out << *r.prime;
        out << ',' << params_compact(r) << ',' << r.lhs << ',' << r.rhs << ','
            << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    for (const auto& [id, s] : report.summary)
        out << "# summary " << id << ": pass=" << s.pass << " fail=" << s.fail << '\n';
    for (const auto& [k, v] : report.environment) out << "# " << k << "=" << v << '\n';
    for (const auto& n : report.notes) out << "# note: " << n << '\n';
    return out.str();
}

std::string element_to_jsonl(const AElement& e) {
    std::ostringstream out;
    for (const auto& [p, v] : e.residues()) {
        ordered_json o;
        o["label"] = e.label();
        o["p"] = p;
        o["residue"] = v;
        out << o.dump() << '\n';
    }
    return out.str();
}

std::string element_to_csv(const AElement& e) {
    std::ostringstream out;
    out << "label,p,residue\n";
    for (const auto& [p, v] : e.residues())
        out << e.label() << ',' << p << ',' << v << '\n';
    return out.str();
}

std::map<std::uint64_t, GregoryResidues> load_gregory_cache(const std::string& path) {
    std::map<std::uint64_t, GregoryResidues> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json o = nlohmann::json::parse(line, nullptr, false);
        if (o.is_discarded() || !o.is_object()) continue;
        if (o.value("quantity", "") != "gregory_residues") continue;
        if (o.value("schema_version", -1) != kCacheSchemaVersion) continue;
        GregoryResidues g;
        g.p = o.value("p", 0ull);
        if (g.p < 3) continue;
        g.abs_g = o.value("abs_g", std::vector<std::uint64_t>{});
        g.regularized_tail = o.value("tail", 0ull);
        if (g.abs_g.size() != g.p - 1) continue;  // malformed entry
        out.emplace(g.p, std::move(g));
    }
    return out;
}

void save_gregory_cache(const std::string& path, GregoryCache& cache) {
    std::ostringstream out;
    for (std::uint64_t p : cache.cached_primes()) {
        auto g = cache.get(p);
        ordered_json o;
        o["quantity"] = "gregory_residues";
        o["p"] = g->p;
        o["schema_version"] = kCacheSchemaVersion;
        o["abs_g"] = g->abs_g;
        o["tail"] = g->regularized_tail;
        out << o.dump() << '\n';
    }
    write_output(path, out.str());
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        f << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace aring
