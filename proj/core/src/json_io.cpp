#include "qdc/json_io.hpp"

#include <sstream>

namespace qdc {

using nlohmann::json;

json to_json(const TruthTable& t) {
    return json{{"m", t.m()}, {"n", t.n()}, {"table", t.table()}};
}

TruthTable truth_table_from_json(const json& j) {
    return TruthTable(j.at("m").get<int>(), j.at("n").get<int>(),
                      j.at("table").get<std::vector<uint32_t>>());
}

json to_json(const SampleSet& s) {
    return json{{"m", s.m}, {"samples", s.samples}};
}

json to_json(const DifferentialCandidate& c) {
    return json{{"dx", c.dx}, {"dy", c.dy}, {"mask", c.mask}};
}

DifferentialCandidate candidate_from_json(const json& j) {
    DifferentialCandidate c{j.at("dx").get<uint32_t>(), j.at("dy").get<uint32_t>(),
                            j.at("mask").get<uint32_t>()};
    if (c.dy & ~c.mask) throw std::invalid_argument("candidate dy has bits outside the mask");
    return c;
}

json to_json(const SolutionSets& s) {
    json j{{"m", s.m}, {"dim", s.basis.size()}, {"basis", s.basis}};
    if (s.particular)
        j["particular"] = *s.particular;
    else
        j["particular"] = nullptr;
    return j;
}

json to_json(const VerifiedCandidate& v) {
    json j = to_json(v.cand);
    j["num"] = v.prob.num;
    j["den"] = v.prob.den;
    j["prob"] = v.prob.value();
    j["flagged"] = v.below_half;
    return j;
}

json to_json(const ValidationReport& r) {
    return json{{"m", r.m},
                {"n", r.n},
                {"trials", r.trials},
                {"skipped", r.skipped},
                {"p", r.p},
                {"epsilon", r.epsilon},
                {"pairs_checked", r.pairs_checked},
                {"violations", r.violations},
                {"threshold", r.threshold},
                {"bound", r.bound},
                {"floor_bound", r.floor_bound},
                {"empirical_rate", r.empirical_rate()}};
}

json to_json(const SpnSpec& s) {
    return json{{"k", s.k()},           {"l", s.l},       {"m", s.m},
                {"sbox", to_json(s.sbox)}, {"perm", s.perm}, {"rounds", s.rounds}};
}

SpnSpec spn_spec_from_json(const json& j) {
    SpnSpec s{j.at("l").get<int>(), j.at("m").get<int>(), j.at("rounds").get<int>(),
              truth_table_from_json(j.at("sbox")), j.at("perm").get<std::vector<int>>()};
    if (j.contains("k") && j.at("k").get<int>() != s.k())
        throw std::invalid_argument("spec field k disagrees with l*m");
    s.validate();
    return s;
}

std::string ddt_to_csv(const Ddt& d) {
    std::ostringstream out;
    out << "a";
    for (std::size_t b = 0; b < (std::size_t(1) << d.n); ++b) out << ",b" << b;
    out << "\n";
    for (std::size_t a = 0; a < (std::size_t(1) << d.m); ++a) {
        out << a;
        for (std::size_t b = 0; b < (std::size_t(1) << d.n); ++b)
            out << "," << d.at(uint32_t(a), uint32_t(b));
        out << "\n";
    }
    return out.str();
}

}  // namespace qdc
