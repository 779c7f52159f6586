#include "mukai/report.hpp"

#include <json.hpp>


#include "mukai/verify.hpp"

namespace mukai {

using ordered_json = nlohmann::ordered_json;

GenusReport assemble_report(const GenusContext& ctx) {
    // Cross-module invariants must hold before anything is serialized. The
    // quadratic enumeration oracle is left to the verify sweep.
    VerifyOptions opts;
    opts.include_box_oracle = false;
    GenusCheck check = check_genus(ctx, opts);
    if (!check.failures.empty())
        throw std::logic_error("invariant " + check.failures.front().invariant_id +
                               " failed at witness " + check.failures.front().witness);

    WallSystem walls = build_wall_system(ctx);
    SequenceSummary sequence = sequence_summary(ctx, walls);
    ChamberTable chambers = build_chamber_table(ctx, walls);
    VisitorVerdict verdict = theorem_verdicts(ctx, walls);
    std::vector<SodBlock> blocks = block_inventory(ctx, walls);
    Int total = block_total(ctx, walls);

    Int listed(0);
    for (const auto& b : blocks)
        listed += b.multiplicity;
    if (listed != total)
        throw std::logic_error("block ledger total disagrees with the direct summation");

    std::optional<DualityTable> duality;
    if (ctx.is_three_mod_4())
        duality = build_duality_table(ctx, walls);

    return GenusReport{ctx,     std::move(walls),  std::move(sequence), std::move(chambers),
                       std::move(verdict), std::move(blocks), std::move(total),   std::move(duality)};
}

Format parse_format(const std::string& name) {
    if (name == "md")
        return Format::Md;
    if (name == "csv")
        return Format::Csv;
    if (name == "json")
        return Format::Json;
    throw std::invalid_argument("unknown format '" + name + "' (expected md, csv or json)");
}

std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string pic_str(const PicClass& p) {
    return "O(" + rat_str(p.m) + "," + rat_str(p.n) + ")";
}

namespace {

std::string pair_str(const WallPair& p) {
    return "(" + std::to_string(p.c) + "," + std::to_string(p.d) + ")";
}

std::string md_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells)
        out += " " + c + " |";
    out += "\n";
    return out;
}

std::vector<std::vector<std::string>> table_rows(const GenusReport& report) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& crossing : report.sequence.crossings) {
        for (const auto& rec : crossing.records) {
            rows.push_back({std::to_string(crossing.index), pair_str(rec.pair),
                            rat_str(rec.pair.slope), rec.k_plus.get_str(), rec.k_minus.get_str(),
                            Int(rec.k_plus - rec.k_minus).get_str(), to_string(rec.pair.vector),
                            rec.moduli_dim.get_str()});
        }
    }
    return rows;
}

const std::vector<std::string> kTableHeader = {"i",  "(c,d)", "mu",      "k+",
                                               "k-", "k+-k-", "v_{c,d}", "dim M(v_{c,d})"};

std::string csv_quote(const std::string& field) {
    bool needs = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs)
        return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += "\"";
    return out;
}

long to_i64(const Int& z, const char* what) {
    if (!z.fits_slong_p())
        throw std::overflow_error(std::string(what) + " exceeds the JSON integer range");
    return z.get_si();
}

ordered_json json_rat(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return ordered_json{{"num", to_i64(c.get_num(), "rational numerator")},
                        {"den", to_i64(c.get_den(), "rational denominator")}};
}

ordered_json json_vec(const MukaiVector& v) {
    return ordered_json::array({to_i64(v.r, "vector entry"), to_i64(v.m, "vector entry"),
                                to_i64(v.s, "vector entry")});
}

ordered_json json_pic(const PicClass& p) {
    return ordered_json{{"m", json_rat(p.m)}, {"n", json_rat(p.n)}};
}

ordered_json json_walls(const GenusReport& report) {
    ordered_json walls = ordered_json::array();
    for (const auto& crossing : report.sequence.crossings) {
        ordered_json group;
        group["i"] = crossing.index;
        group["kind"] = to_string(crossing.kind);
        group["pairs"] = ordered_json::array();
        for (const auto& rec : crossing.records) {
            ordered_json p;
            p["c"] = rec.pair.c;
            p["d"] = rec.pair.d;
            p["mu"] = json_rat(rec.pair.slope);
            p["k_plus"] = to_i64(rec.k_plus, "k+");
            p["k_minus"] = to_i64(rec.k_minus, "k-");
            p["vector"] = json_vec(rec.pair.vector);
            p["moduli_dim"] = to_i64(rec.moduli_dim, "moduli dimension");
            p["label"] = rec.moduli_label;
            p["twisted_possible"] = rec.twisted_possible;
            group["pairs"].push_back(std::move(p));
        }
        walls.push_back(std::move(group));
    }
    return walls;
}

ordered_json json_chambers(const GenusReport& report) {
    ordered_json chambers = ordered_json::array();
    for (const auto& ch : report.chambers.chambers) {
        ordered_json c;
        c["i"] = ch.model_index;
        c["lower"] = json_pic(ch.lower);
        c["upper"] = json_pic(ch.upper);
        c["upper_is_outer_bound"] = ch.upper_is_outer_bound;
        chambers.push_back(std::move(c));
    }
    return chambers;
}

ordered_json json_verdict(const GenusReport& report) {
    ordered_json v;
    v["verdict"] = report.verdict.verdict == Verdict::Fano ? "Fano" : "WeakFano";
    v["fano_model_index"] = report.verdict.fano_model_index;
    if (report.chambers.fano_index)
        v["fano_index"] = *report.chambers.fano_index;
    else
        v["fano_index"] = nullptr;
    v["weak_fano_indices"] = report.chambers.weak_fano_indices;
    v["theta_g"] = json_rat(report.chambers.theta);
    v["anticanonical"] = json_pic(anticanonical(report.ctx));
    v["visitors"] = ordered_json::array();
    for (const auto& vis : report.verdict.visitors) {
        v["visitors"].push_back(ordered_json{{"c", vis.pair.c},
                                             {"d", vis.pair.d},
                                             {"label", vis.label},
                                             {"strict", vis.strict}});
    }
    v["strict_d_bound"] = json_rat(report.verdict.strict_d_bound);
    v["stated_d_bound"] = json_rat(report.verdict.stated_d_bound);
    v["blocks"] = ordered_json::array();
    for (const auto& b : report.blocks) {
        v["blocks"].push_back(ordered_json{{"label", b.label},
                                           {"dimension", to_i64(b.dimension, "block dimension")},
                                           {"multiplicity", to_i64(b.multiplicity, "multiplicity")},
                                           {"twisted_possible", b.twisted_possible}});
    }
    v["total_blocks"] = to_i64(report.total_blocks, "block total");
    // The ledger composes blow-up bookkeeping with per-crossing rank gains;
    // it is not quoted from a single closed statement.
    v["block_composition"] = "blowup_bookkeeping_plus_flip_gains";
    return v;
}

ordered_json json_duality(const GenusReport& report) {
    if (!report.duality)
        return nullptr;
    ordered_json d;
    const DiscriminantAction action = discriminant_action(report.ctx);
    d["discriminant"] = ordered_json{{"modulus", to_i64(action.modulus, "modulus")},
                                     {"multiplier", to_i64(action.multiplier, "multiplier")},
                                     {"is_trivial", action.is_trivial}};
    d["pairs"] = ordered_json::array();
    for (const auto& e : report.duality->pair_map) {
        d["pairs"].push_back(ordered_json{{"c", e.pair.c},
                                          {"d", e.pair.d},
                                          {"dual_c", e.dual.c},
                                          {"dual_d", e.dual.d},
                                          {"self_dual", e.self_dual}});
    }
    d["group_map"] = ordered_json::array();
    for (const auto& [i, j] : report.duality->group_map)
        d["group_map"].push_back(ordered_json{{"i", i}, {"dual_i", j}});
    d["self_dual"] = ordered_json::array();
    for (const auto& p : report.duality->self_dual)
        d["self_dual"].push_back(ordered_json{{"c", p.c}, {"d", p.d}});
    return d;
}

ordered_json json_divisorial(const GenusReport& report) {
    if (!report.sequence.divisorial)
        return nullptr;
    const auto& data = *report.sequence.divisorial;
    ordered_json d;
    d["spherical_vector"] = json_vec(data.spherical_vector);
    d["strata"] = ordered_json::array();
    for (const auto& st : data.strata) {
        d["strata"].push_back(ordered_json{{"k", st.k},
                                           {"b_k", json_vec(st.b_k)},
                                           {"b_square", to_i64(st.b_square, "stratum square")},
                                           {"fiber", st.fiber},
                                           {"fixed_fiber_on_M", st.fixed_fiber_on_m},
                                           {"fixed_fiber_on_Omega", st.fixed_fiber_on_omega}});
    }
    return d;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string render_table_md(const GenusReport& report) {
    std::string out = md_row(kTableHeader);
    out += md_row(std::vector<std::string>(kTableHeader.size(), "---"));
    for (const auto& row : table_rows(report))
        out += md_row(row);
    return out;
}

std::string render_table_csv(const GenusReport& report) {
    auto line = [](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += ",";
            out += csv_quote(cells[i]);
        }
        return out + "\n";
    };
    std::string out = line(kTableHeader);
    for (const auto& row : table_rows(report))
        out += line(row);
    return out;
}

std::string render_report_json(const GenusReport& report) {
    ordered_json j;
    j["schema"] = "v1";
    j["genus"] = report.ctx.genus();
    j["eta"] = report.walls.eta();
    j["nu"] = report.walls.nu();
    j["parity"] = parity_name(report.ctx.parity());
    j["walls"] = json_walls(report);
    j["chambers"] = json_chambers(report);
    j["verdict"] = json_verdict(report);
    j["duality"] = json_duality(report);
    j["divisorial"] = json_divisorial(report);
    return dump(j);
}

std::string render_duality_md(const GenusReport& report) {
    const auto& table = *report.duality;
    std::string out = "duality table, genus " + std::to_string(report.ctx.genus()) + "\n\n";
    out += md_row({"(c,d)", "(c',d')", "mu", "mu'", "self-dual"});
    out += md_row({"---", "---", "---", "---", "---"});
    for (const auto& e : table.pair_map)
        out += md_row({pair_str(e.pair), pair_str(e.dual), rat_str(e.pair.slope),
                       rat_str(e.dual.slope), e.self_dual ? "yes" : "no"});
    out += "\ngroup map: ";
    for (std::size_t k = 0; k < table.group_map.size(); ++k) {
        if (k)
            out += ", ";
        out += std::to_string(table.group_map[k].first) + "->" +
               std::to_string(table.group_map[k].second);
    }
    out += "\nself-dual walls:";
    for (const auto& p : table.self_dual)
        out += " " + pair_str(p);
    const DiscriminantAction action = discriminant_action(report.ctx);
    out += "\ndiscriminant action: multiplication by " + action.multiplier.get_str() + " mod " +
           action.modulus.get_str() + (action.is_trivial ? " (trivial)" : " (nontrivial)") + "\n";
    out += "certificate: the two K3 surfaces of the pair are not isomorphic\n";
    return out;
}

std::string render_duality_json(const GenusReport& report) {
    ordered_json j;
    j["schema"] = "v1";
    j["genus"] = report.ctx.genus();
    j["duality"] = json_duality(report);
    return dump(j);
}

std::string render_sod_md(const GenusReport& report) {
    std::string out =
        "semiorthogonal block ledger, genus " + std::to_string(report.ctx.genus()) + "\n";
    out += "verdict: " + std::string(report.verdict.verdict == Verdict::Fano ? "Fano" : "WeakFano") +
           " model M_" + std::to_string(report.verdict.fano_model_index) + "\n\n";
    out += md_row({"block", "dim", "multiplicity", "possibly twisted"});
    out += md_row({"---", "---", "---", "---"});
    for (const auto& b : report.blocks)
        out += md_row({b.label, b.dimension.get_str(), b.multiplicity.get_str(),
                       b.twisted_possible ? "yes" : "no"});
    out += "\ntotal blocks: " + report.total_blocks.get_str() + "\n";
    out += "visitors:";
    for (const auto& v : report.verdict.visitors)
        out += " " + v.label + (v.strict ? "" : " (on the equality wall)");
    out += "\n";
    return out;
}

std::string render_sod_json(const GenusReport& report) {
    ordered_json j;
    j["schema"] = "v1";
    j["genus"] = report.ctx.genus();
    j["verdict"] = json_verdict(report);
    return dump(j);
}

std::string render_cones_md(const GenusReport& report) {
    std::string out = "ample chambers, genus " + std::to_string(report.ctx.genus()) + "\n";
    out += "theta_g = " + rat_str(report.chambers.theta) +
           ", anticanonical = " + pic_str(anticanonical(report.ctx)) + "\n\n";
    out += md_row({"i", "lower", "upper", "note"});
    out += md_row({"---", "---", "---", "---"});
    for (const auto& ch : report.chambers.chambers)
        out += md_row({std::to_string(ch.model_index), pic_str(ch.lower), pic_str(ch.upper),
                       ch.upper_is_outer_bound ? "outer bound, possibly not tight" : ""});
    if (report.chambers.fano_index)
        out += "\nFano chamber: i = " + std::to_string(*report.chambers.fano_index) + "\n";
    else
        out += "\nFano chamber: none (-K lies on the slope-1 wall)\n";
    out += "weak Fano chambers:";
    for (long i : report.chambers.weak_fano_indices)
        out += " " + std::to_string(i);
    out += "\n";
    return out;
}

std::string render_cones_json(const GenusReport& report) {
    ordered_json j;
    j["schema"] = "v1";
    j["genus"] = report.ctx.genus();
    j["theta_g"] = json_rat(report.chambers.theta);
    j["anticanonical"] = json_pic(anticanonical(report.ctx));
    j["chambers"] = json_chambers(report);
    if (report.chambers.fano_index)
        j["fano_index"] = *report.chambers.fano_index;
    else
        j["fano_index"] = nullptr;
    j["weak_fano_indices"] = report.chambers.weak_fano_indices;
    return dump(j);
}

std::string render_lattice_md(const GenusReport& report) {
    const GenusContext& ctx = report.ctx;
    std::string out = "Mukai lattice data, genus " + std::to_string(ctx.genus()) + "\n";
    out += "h^2 = " + ctx.h_square().get_str() + ", v = " + to_string(base_vector(ctx)) +
           ", v^2 = " + mukai_square(base_vector(ctx), ctx).get_str() + "\n";
    if (!ctx.is_three_mod_4()) {
        out += "dual-exchange isometry: defined only for g = 3 mod 4\n";
        return out;
    }
    LatticeIsometry theta = theta_isometry(ctx);
    out += "dual-exchange isometry matrix (rows act on (r, m, s)):\n";
    for (const auto& row : theta.matrix()) {
        out += "  [";
        for (int k = 0; k < 3; ++k)
            out += (k ? ", " : " ") + rat_str(row[k]);
        out += " ]\n";
    }
    const DiscriminantAction action = discriminant_action(ctx);
    out += "discriminant action: multiplication by " + action.multiplier.get_str() + " mod " +
           action.modulus.get_str() + (action.is_trivial ? " (trivial)" : " (nontrivial)") + "\n";
    return out;
}

std::string render_lattice_json(const GenusReport& report) {
    const GenusContext& ctx = report.ctx;
    ordered_json j;
    j["schema"] = "v1";
    j["genus"] = ctx.genus();
    j["h_square"] = to_i64(ctx.h_square(), "h^2");
    j["v"] = json_vec(base_vector(ctx));
    if (ctx.is_three_mod_4()) {
        LatticeIsometry theta = theta_isometry(ctx);
        ordered_json rows = ordered_json::array();
        for (const auto& row : theta.matrix()) {
            ordered_json r = ordered_json::array();
            for (const auto& e : row)
                r.push_back(json_rat(e));
            rows.push_back(std::move(r));
        }
        j["theta_matrix"] = std::move(rows);
        const DiscriminantAction action = discriminant_action(ctx);
        j["discriminant"] = ordered_json{{"modulus", to_i64(action.modulus, "modulus")},
                                         {"multiplier", to_i64(action.multiplier, "multiplier")},
                                         {"is_trivial", action.is_trivial}};
    } else {
        j["theta_matrix"] = nullptr;
        j["discriminant"] = nullptr;
    }
    return dump(j);
}

} // namespace mukai
