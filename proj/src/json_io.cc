#include <ramgirth/errors.hpp>
#include <ramgirth/json_io.hpp>

namespace ramgirth {

Json to_json(const LogNum & x)
{
    return Json{{"sign", x.sign()}, {"log2", x.is_zero() ? std::string("-inf") : x.log2().to_string()}};
}

LogNum lognum_from_json(const Json & j, mpfr_prec_t prec)
{
    try {
        int sign = j.at("sign").get<int>();
        if (sign == 0)
            return LogNum(prec);
        return LogNum::from_log2(BigFloat::parse(j.at("log2").get<std::string>(), prec), sign);
    }
    catch (const nlohmann::json::exception & e) {
        throw InputError(std::string("malformed number object: ") + e.what());
    }
}

Json to_json(const Graph & g)
{
    Json edges = Json::array();
    for (const auto & e : g.edges())
        edges.push_back({e.u, e.v});
    return Json{{"n", g.order()}, {"m", g.size()}, {"edges", std::move(edges)}};
}

Json to_json(const Colouring & c) { return Json{{"colours", c.colours}, {"of", c.of}}; }

Json to_json(const GirthVerdict & v)
{
    Json out{{"satisfied", v.satisfied}};
    if (! v.satisfied) {
        out["witness"] = v.witness;
        out["witness_span"] = v.witness_span;
    }
    return out;
}

Json to_json(const CycleReport & r, bool with_cycles)
{
    Json counts = Json::object();
    for (auto [j, x] : r.counts)
        counts[std::to_string(j)] = x;
    Json out{{"counts", std::move(counts)}, {"total", r.cycles.size()}};
    if (with_cycles) {
        Json cycles = Json::array();
        for (const auto & c : r.cycles)
            cycles.push_back(Json{{"length", c.length}, {"edges", c.edges}});
        out["cycles"] = std::move(cycles);
    }
    return out;
}

namespace {

Json check_json(const NamedCheck & c)
{
    return Json{{"name", c.name}, {"holds", c.holds}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}};
}

} // namespace

Json to_json(const ParamSet & ps)
{
    Json out{{"theorem", to_string(ps.theorem)},
             {"k", ps.k},
             {"r", ps.r},
             {"g", ps.g},
             {ps.theorem == Theorem::ap ? "W" : "R", ps.ramsey},
             {"precision_bits", ps.precision},
             {"uniformity", ps.uniformity},
             {"epsilon", to_string(ps.epsilon)},
             {"D_tau", to_json(ps.d_tau)},
             {"K", to_string(ps.K)},
             {"s", to_string(ps.s)},
             {"D_p", to_json(ps.d_p)},
             {"n", to_json(ps.n)},
             {"tau", to_json(ps.tau)},
             {"p", to_json(ps.p)}};
    if (ps.t)
        out["t"] = to_json(*ps.t);
    out["size_bound"] = to_json(ps.size_bound);
    Json checks = Json::array();
    for (const auto & c : ps.checks)
        checks.push_back(check_json(c));
    out["checks"] = std::move(checks);
    return out;
}

Json to_json(const ContainerVerdict & v)
{
    return Json{{"satisfied", v.satisfied},
                {"lhs", to_json(v.lhs)},
                {"margin", to_json(v.margin)},
                {"precision_bits", v.precision}};
}

Json to_json(const FBoundsReport & r)
{
    Json out{{"k", r.k},
             {"r", r.r},
             {"parity", r.parity == Parity::even ? "even" : "odd"},
             {"lower", to_string(r.lower)},
             {"lower_rule", r.lower_rule}};
    if (r.ramsey) {
        out["ramsey"] = *r.ramsey;
        out["ramsey_source"] = r.ramsey_source;
    }
    if (r.ramsey_lower)
        out["ramsey_lower"] = to_string(*r.ramsey_lower);
    if (r.upper)
        out["upper"] = to_json(*r.upper);
    if (r.special_exponent)
        out["special_exponent"] = *r.special_exponent;
    out["consistent"] = r.consistent;
    return out;
}

Json to_json(const FactVdwReport & r)
{
    Json out{{"branch", to_string(r.branch)},
             {"mono_count", r.mono_count},
             {"ap_count", r.ap_count},
             {"last_class", r.last_class},
             {"ap_w_count", r.ap_w_count},
             {"first_holds", r.first_holds},
             {"second_holds", r.second_holds},
             {"certified", r.certified}};
    if (r.w_check)
        out["w_check"] = to_string(*r.w_check);
    return out;
}

Json to_json(const ArrowResult & r)
{
    Json out{{"verdict", to_string(r.verdict)}, {"copies", r.copies}, {"nodes", r.nodes}};
    if (r.witness)
        out["witness"] = to_json(*r.witness);
    return out;
}

Json to_json(const SweepResult & r)
{
    Json out = Json::object();
    if (r.value)
        out["value"] = *r.value;
    else
        out["value"] = nullptr;
    out["lower_bound"] = r.lower_bound;
    Json w = Json::array();
    for (const auto & [n, c] : r.witnesses)
        w.push_back(Json{{"n", n}, {"colouring", to_json(c)}});
    out["witnesses"] = std::move(w);
    out["nodes"] = r.nodes;
    return out;
}

Json to_json(const ExtremalResult & r)
{
    return Json{{"exact", r.exact}, {"edges", r.edges}, {"witness", to_json(r.witness)}, {"nodes", r.nodes}};
}

Json to_json(const TrialConfig & c)
{
    Json out{{"theorem", to_string(c.theorem)}, {"n", c.n}};
    if (c.p)
        out["p"] = *c.p;
    if (c.scale)
        out["scale"] = *c.scale;
    out["p_resolved"] = c.resolved_p();
    out["k"] = c.k;
    out["g"] = c.g;
    out["r"] = c.r;
    out["seed"] = c.seed;
    out["trials"] = c.trials;
    out["cap"] = c.resolved_cap();
    if (c.theorem == Theorem::cycles)
        out["max_tries"] = c.max_tries;
    out["budget_nodes"] = c.budget.nodes ? Json(*c.budget.nodes) : Json(nullptr);
    out["budget_secs"] = c.budget.seconds ? Json(*c.budget.seconds) : Json(nullptr);
    out["prng"] = prng_algorithm;
    out["version"] = tool_version;
    return out;
}

Json trial_record_json(const TrialConfig & c, const TrialRecord & r)
{
    Json out{{"v", schema_version}, {"type", "trial"}, {"config", to_json(c)}, {"index", r.index}, {"seed", r.seed}};
    if (r.error) {
        out["error"] = *r.error;
        return out;
    }
    out["object_size"] = r.object_size;
    out["copies"] = r.copies;
    Json counts = Json::object();
    for (auto [j, x] : r.counts)
        counts[std::to_string(j)] = x;
    out["X"] = std::move(counts);
    if (c.theorem == Theorem::cycles)
        out["tries"] = r.tries;
    else {
        out["cap_exceeded"] = r.cap_exceeded;
        out["removed"] = r.removed;
    }
    out["girth_ok"] = r.girth_ok;
    out["colouring"] = r.colouring ? Json(to_string(*r.colouring)) : Json(nullptr);
    out["nodes"] = r.nodes;
    if (r.wall_ms)
        out["wall_ms"] = *r.wall_ms;
    return out;
}

Json trial_summary_json(const TrialConfig & c, const TrialSummary & s)
{
    Json means = Json::object();
    for (auto [j, x] : s.mean_counts)
        means[std::to_string(j)] = x;
    Json colouring = Json::object();
    for (const auto & [k, x] : s.colouring)
        colouring[k] = x;
    return Json{{"v", schema_version},
                {"type", "summary"},
                {"config", to_json(c)},
                {"trials", s.trials},
                {"errors", s.errors},
                {"successes", s.successes},
                {"success_rate", s.success_rate},
                {"mean_object_size", s.mean_object_size},
                {"mean_removed", s.mean_removed},
                {"mean_X", std::move(means)},
                {"colouring", std::move(colouring)}};
}

Json envelope(std::string_view command, Json config, Json result)
{
    return Json{{"v", schema_version},
                {"tool", tool_name},
                {"version", tool_version},
                {"command", command},
                {"config", std::move(config)},
                {"result", std::move(result)}};
}

} // namespace ramgirth
