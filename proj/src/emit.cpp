#include "irrpoly/emit.hpp"

#include <sstream>
#include <stdexcept>

namespace irrpoly {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string rule_kind(DifferentialRule::Kind k) {
    return k == DifferentialRule::Kind::known_injective ? "known_injective" : "known_zero";
}

Json rule_json(const DifferentialRule& r) {
    Json j;
    j["page"] = r.page;
    j["source_column"] = r.source_column;
    if (r.degree_range)
        j["degrees"] = {r.degree_range->first, r.degree_range->second};
    else
        j["degrees"] = "all";
    j["kind"] = rule_kind(r.kind);
    j["justification"] = r.justification;
    return j;
}

std::string md_table_rule(size_t cols) {
    std::string s = "|";
    for (size_t i = 0; i < cols; ++i) s += "---|";
    return s + "\n";
}

} // namespace

Format parse_format(const std::string& text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "md") return Format::md;
    throw std::invalid_argument("unknown format '" + text + "' (use json, csv or md)");
}

Json qpoly_json(const QPoly& p) {
    Json j = Json::object();
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        j[std::to_string(it->first)] = to_string(it->second);
    return j;
}

Json series_json(const Series& s, std::optional<SymConvention> conv) {
    Json j;
    j["trunc"] = s.trunc();
    if (conv) j["convention"] = to_string(*conv);
    Json coeffs = Json::array();
    for (int k = 0; k <= s.trunc(); ++k) coeffs.push_back(s.at(k).get_str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

std::string emit_count(int d, int n, const QPoly& count, const std::vector<Int>& eval_points,
                       Format fmt) {
    switch (fmt) {
        case Format::json: {
            Json j;
            j["d"] = d;
            j["n"] = n;
            j["count"] = qpoly_json(count);
            Json evals = Json::object();
            for (const Int& q : eval_points) evals["q=" + q.get_str()] = count.eval_int(q).get_str();
            j["evals"] = std::move(evals);
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "kind,key,value\n";
            const auto& c = count.coefficients();
            for (auto it = c.rbegin(); it != c.rend(); ++it)
                os << "coeff," << it->first << "," << to_string(it->second) << "\n";
            for (const Int& q : eval_points)
                os << "eval," << q.get_str() << "," << count.eval_int(q).get_str() << "\n";
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "count d=" << d << " n=" << n << "\n\n";
            os << "    " << count.to_string() << "\n\n";
            os << "| q | value |\n" << md_table_rule(2);
            for (const Int& q : eval_points)
                os << "| " << q.get_str() << " | " << count.eval_int(q).get_str() << " |\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit_euler(int d_max, int n_max, const std::vector<EulerRow>& rows, Format fmt) {
    switch (fmt) {
        case Format::json: {
            Json j;
            j["d_max"] = d_max;
            j["n_max"] = n_max;
            Json table = Json::array();
            for (const EulerRow& r : rows)
                table.push_back(Json{{"d", r.d}, {"n", r.n}, {"chi", r.chi.get_str()}});
            j["table"] = std::move(table);
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "d,n,chi\n";
            for (const EulerRow& r : rows) os << r.d << "," << r.n << "," << r.chi.get_str() << "\n";
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "| d \\ n |";
            for (int n = 1; n <= n_max; ++n) os << " " << n << " |";
            os << "\n" << md_table_rule(size_t(n_max) + 1);
            for (int d = 1; d <= d_max; ++d) {
                os << "| " << d << " |";
                for (int n = 1; n <= n_max; ++n)
                    os << " " << rows[size_t(d - 1) * size_t(n_max) + size_t(n - 1)].chi.get_str()
                       << " |";
                os << "\n";
            }
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit_carlitz(int q, int n, const std::vector<CarlitzRow>& rows, Format fmt) {
    Rat limit = Rat(q, q - 1);
    limit.canonicalize();
    switch (fmt) {
        case Format::json: {
            Json j;
            j["q"] = q;
            j["n"] = n;
            j["limit"] = to_string(limit);
            Json table = Json::array();
            for (const CarlitzRow& r : rows)
                table.push_back(Json{{"d", r.d},
                                     {"ratio", to_string(r.ratio)},
                                     {"decimal", decimal_string(r.ratio)}});
            j["rows"] = std::move(table);
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "d,ratio,decimal\n";
            for (const CarlitzRow& r : rows)
                os << r.d << "," << to_string(r.ratio) << "," << decimal_string(r.ratio) << "\n";
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "ratio of irreducible to all normalized polynomials, q=" << q << " n=" << n
               << " (limit " << to_string(limit) << ")\n\n";
            os << "| d | ratio | decimal |\n" << md_table_rule(3);
            for (const CarlitzRow& r : rows)
                os << "| " << r.d << " | " << to_string(r.ratio) << " | "
                   << decimal_string(r.ratio) << " |\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit_hyde(const HydeResult& res, Format fmt) {
    switch (fmt) {
        case Format::json: {
            Json j;
            j["d"] = res.d;
            j["window"] = res.window;
            j["n_max"] = res.n_max;
            j["found"] = res.found;
            if (res.found) {
                j["n0"] = res.n0;
                Json coeffs = Json::object();
                for (int k = 0; k <= res.window; ++k)
                    coeffs["q^" + std::to_string(k)] = to_string(res.coefficients[size_t(k)]);
                j["coefficients"] = std::move(coeffs);
            } else {
                j["n0"] = nullptr;
            }
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "d,window,n_max,found,n0,exponent,coefficient\n";
            if (!res.found) {
                os << res.d << "," << res.window << "," << res.n_max << ",0,,,\n";
            } else {
                for (int k = 0; k <= res.window; ++k)
                    os << res.d << "," << res.window << "," << res.n_max << ",1," << res.n0 << ","
                       << k << "," << to_string(res.coefficients[size_t(k)]) << "\n";
            }
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            if (!res.found) {
                os << "no stabilization of q^0..q^" << res.window << " for d=" << res.d
                   << " within n <= " << res.n_max << "\n";
                return os.str();
            }
            os << "coefficients of q^0..q^" << res.window << " for d=" << res.d
               << " stabilize at n0=" << res.n0 << " (three consecutive agreements)\n\n";
            os << "| exponent | coefficient |\n" << md_table_rule(2);
            for (int k = 0; k <= res.window; ++k)
                os << "| q^" << k << " | " << to_string(res.coefficients[size_t(k)]) << " |\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit_series(int d, const Series& s, SymConvention conv, Format fmt) {
    switch (fmt) {
        case Format::json: {
            Json j;
            j["d"] = d;
            Json body = series_json(s, conv);
            for (auto& [k, v] : body.items()) j[k] = v;
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "degree,coefficient\n";
            for (int k = 0; k <= s.trunc(); ++k) os << k << "," << s.at(k).get_str() << "\n";
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "stable series d=" << d << " (convention " << to_string(conv) << ", order "
               << s.trunc() << ")\n\n    " << s.to_string() << "\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit_series_comparison(int d, const Series& pipeline, const Series& reference,
                                   const RationalForm& reference_form, SymConvention conv,
                                   Format fmt) {
    SeriesComparison cmp = compare_series(pipeline, reference);
    switch (fmt) {
        case Format::json: {
            Json j;
            j["d"] = d;
            j["convention"] = to_string(conv);
            j["pipeline"] = series_json(pipeline, conv);
            j["reference_form"] = reference_form.to_string();
            j["reference"] = series_json(reference, conv);
            j["compared_through"] = cmp.compared_through;
            j["agrees"] = !cmp.first_divergence.has_value();
            if (cmp.first_divergence) j["first_divergence"] = *cmp.first_divergence;
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "degree,pipeline,reference,match\n";
            for (int k = 0; k <= cmp.compared_through; ++k)
                os << k << "," << pipeline.at(k).get_str() << "," << reference.at(k).get_str()
                   << "," << (pipeline.at(k) == reference.at(k) ? 1 : 0) << "\n";
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "stable series d=" << d << ": pipeline vs tabulated closed form "
               << reference_form.to_string() << "\n\n";
            os << "    pipeline:  " << pipeline.to_string() << "\n";
            os << "    reference: " << reference.to_string() << "\n\n";
            if (cmp.first_divergence)
                os << "FLAG: first divergence at degree " << *cmp.first_divergence
                   << " (pipeline " << pipeline.at(*cmp.first_divergence).get_str()
                   << ", reference " << reference.at(*cmp.first_divergence).get_str() << ")\n";
            else
                os << "series agree through degree " << cmp.compared_through << "\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

Json betti_json_body(const BettiWindow& w) {
    Json j;
    j["d"] = w.d;
    j["convention"] = to_string(w.conv);
    j["max_degree"] = w.max_degree;
    j["all_exact"] = w.all_exact;
    Json values = Json::object();
    for (int i = 0; i <= w.max_degree; ++i) {
        const BettiValue& v = w.b[size_t(i)];
        if (v.exact())
            values["b_" + std::to_string(i)] = v.upper.get_str();
        else
            values["b_" + std::to_string(i)] = Json{{"lower", v.lower.get_str()},
                                                    {"upper", v.upper.get_str()}};
    }
    j["betti"] = std::move(values);
    if (!w.uncovered_notes.empty()) j["uncovered"] = w.uncovered_notes;
    j["diverges_from_reference"] = !w.divergent_degrees.empty();
    if (!w.divergent_degrees.empty()) {
        j["divergent_degrees"] = w.divergent_degrees;
        j["divergence_notes"] = w.divergence_notes;
    }
    return j;
}

} // namespace

std::string emit_betti(const BettiWindow& w, Format fmt) {
    switch (fmt) {
        case Format::json:
            return dump(betti_json_body(w));
        case Format::csv: {
            std::ostringstream os;
            os << "degree,lower,upper,exact\n";
            for (int i = 0; i <= w.max_degree; ++i) {
                const BettiValue& v = w.b[size_t(i)];
                os << i << "," << v.lower.get_str() << "," << v.upper.get_str() << ","
                   << (v.exact() ? 1 : 0) << "\n";
            }
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "stable Betti numbers d=" << w.d << " (convention " << to_string(w.conv)
               << ")\n\n";
            os << "| i | b_i |\n" << md_table_rule(2);
            for (int i = 0; i <= w.max_degree; ++i) {
                const BettiValue& v = w.b[size_t(i)];
                os << "| " << i << " | ";
                if (v.exact())
                    os << v.upper.get_str();
                else
                    os << "[" << v.lower.get_str() << ", " << v.upper.get_str() << "]";
                os << " |\n";
            }
            for (const std::string& s : w.uncovered_notes) os << "\nNOTE: " << s << "\n";
            for (const std::string& s : w.divergence_notes)
                os << "\nFLAG: diverges from reference data: " << s << "\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit_e1(const E1Window& window, const std::vector<DifferentialRule>& rules,
                    const BettiWindow* betti, Format fmt) {
    switch (fmt) {
        case Format::json: {
            Json j;
            j["d"] = window.d;
            j["convention"] = to_string(window.conv);
            j["max_total_degree"] = window.max_total_degree;
            Json cols = Json::array();
            for (const auto& col : window.columns) {
                Json entries = Json::array();
                for (int t = 0; t <= window.max_total_degree; ++t)
                    for (const auto& [lambda, dim] : window.entry_breakdown(col.p, t))
                        if (dim != 0)
                            entries.push_back(Json{{"degree", t},
                                                   {"partition", lambda.to_string()},
                                                   {"dim", dim.get_str()}});
                cols.push_back(Json{{"p", col.p}, {"entries", std::move(entries)}});
            }
            j["columns"] = std::move(cols);
            Json rj = Json::array();
            for (const DifferentialRule& r : rules) rj.push_back(rule_json(r));
            j["rules"] = std::move(rj);
            if (betti) j["betti"] = betti_json_body(*betti)["betti"];
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "p,total_degree,partition,dim\n";
            for (const auto& col : window.columns)
                for (int t = 0; t <= window.max_total_degree; ++t)
                    for (const auto& [lambda, dim] : window.entry_breakdown(col.p, t))
                        if (dim != 0)
                            os << col.p << "," << t << "," << lambda.to_string() << ","
                               << dim.get_str() << "\n";
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "first-page window d=" << window.d << " (convention "
               << to_string(window.conv) << ", total degree <= " << window.max_total_degree
               << "; cell = dim at column p, row q, total degree p+q; '.' = outside window)\n\n";
            os << "| q \\ p |";
            for (const auto& col : window.columns) os << " " << col.p << " |";
            os << "\n" << md_table_rule(window.columns.size() + 1);
            for (int q = window.max_total_degree; q >= 0; --q) {
                os << "| " << q << " |";
                for (const auto& col : window.columns) {
                    int t = q + col.p;
                    if (t > window.max_total_degree)
                        os << " . |";
                    else
                        os << " " << window.entry_dim(col.p, t).get_str() << " |";
                }
                os << "\n";
            }
            os << "\ncolumns:\n";
            for (const auto& col : window.columns) {
                os << "  p=" << col.p << ":";
                for (const auto& s : col.strata) os << " " << s.lambda.to_string();
                os << "\n";
            }
            if (!rules.empty()) {
                os << "\nrules:\n";
                for (const DifferentialRule& r : rules) {
                    os << "  page " << r.page << ", source column " << r.source_column << ", ";
                    if (r.degree_range)
                        os << "degrees [" << r.degree_range->first << ", "
                           << r.degree_range->second << "]";
                    else
                        os << "all degrees";
                    os << ": " << rule_kind(r.kind) << " (" << r.justification << ")\n";
                }
            }
            if (betti) os << "\n" << emit_betti(*betti, Format::md);
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit_bounds(const BoundsReport& r, Format fmt) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("low_stability_applicable", r.low_stability_applicable ? "1" : "0");
    kv.emplace_back("low_stability_limit", r.low_stability_limit.get_str());
    kv.emplace_back("high_stability_applicable", r.high_stability_applicable ? "1" : "0");
    if (r.high_stability_applicable)
        kv.emplace_back("high_stability_threshold", to_string(r.high_stability_threshold));
    kv.emplace_back("red_vanishing_applicable", r.red_vanishing_applicable ? "1" : "0");
    kv.emplace_back("red_vanishing_threshold", r.red_vanishing_threshold.get_str());
    kv.emplace_back("max_nonsingleton_stratum_dim", r.max_nonsingleton_stratum_dim.get_str());
    kv.emplace_back("irr_vanishing_applicable", r.irr_vanishing_applicable ? "1" : "0");
    kv.emplace_back("irr_vanishing_through", std::to_string(r.irr_vanishing_through));
    switch (fmt) {
        case Format::json: {
            Json j;
            j["d"] = r.d;
            j["n"] = r.n;
            j["low_stability"] =
                Json{{"applicable", r.low_stability_applicable},
                     {"limit", r.low_stability_limit.get_str()},
                     {"rank", "i even -> 1, i odd -> 0, for 0 <= i <= limit"}};
            Json hs;
            hs["applicable"] = r.high_stability_applicable;
            if (r.high_stability_applicable) {
                hs["threshold"] = to_string(r.high_stability_threshold);
                hs["meaning"] = "extension by one variable is an iso on H^i_c for i < threshold";
            }
            j["high_stability"] = std::move(hs);
            j["red_vanishing"] = Json{{"applicable", r.red_vanishing_applicable},
                                      {"threshold", r.red_vanishing_threshold.get_str()},
                                      {"max_nonsingleton_stratum_dim",
                                       r.max_nonsingleton_stratum_dim.get_str()}};
            j["irr_vanishing"] = Json{{"applicable", r.irr_vanishing_applicable},
                                      {"through", r.irr_vanishing_through}};
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "key,value\n";
            os << "d," << r.d << "\nn," << r.n << "\n";
            for (const auto& [k, v] : kv) os << k << "," << v << "\n";
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "bound report d=" << r.d << " n=" << r.n << "\n\n";
            if (r.low_stability_applicable)
                os << "- homology is rank 1 in even, 0 in odd degrees for i <= "
                   << r.low_stability_limit.get_str() << "\n";
            else
                os << "- low-range stability statement needs n > 1\n";
            if (r.high_stability_applicable)
                os << "- adding a variable is an iso on compactly supported cohomology for i < "
                   << to_string(r.high_stability_threshold) << "\n";
            else
                os << "- high-range stability statement needs d > 1 and n > 1\n";
            if (r.red_vanishing_applicable)
                os << "- reducible locus: H^i_c = 0 for i >= " << r.red_vanishing_threshold.get_str()
                   << " (max stratum dim " << r.max_nonsingleton_stratum_dim.get_str() << ")\n";
            else
                os << "- reducible-locus vanishing statement needs n > 1\n";
            if (r.irr_vanishing_applicable)
                os << "- irreducible locus: H^k_c = 0 for k <= " << r.irr_vanishing_through << "\n";
            else
                os << "- vanishing range statement needs d > 1 and n > 1\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit_census(const BruteContext::Census& census, int d, int n, int p, Format fmt) {
    switch (fmt) {
        case Format::json: {
            Json j;
            j["p"] = p;
            j["n"] = n;
            j["d"] = d;
            j["total"] = census.total.get_str();
            j["irreducible"] = census.irreducible.get_str();
            Json rows = Json::array();
            for (const auto& [lambda, c] : census.rows)
                rows.push_back(Json{{"partition", lambda.to_string()}, {"count", c.get_str()}});
            j["census"] = std::move(rows);
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "p,n,d,partition,count\n";
            for (const auto& [lambda, c] : census.rows)
                os << p << "," << n << "," << d << "," << lambda.to_string() << "," << c.get_str()
                   << "\n";
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "factorization census p=" << p << " n=" << n << " d=" << d << " (total "
               << census.total.get_str() << ")\n\n";
            os << "| partition | count |\n" << md_table_rule(2);
            for (const auto& [lambda, c] : census.rows)
                os << "| " << lambda.to_string() << " | " << c.get_str() << " |\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit_cross_validation(const CrossValidationReport& report, Format fmt) {
    switch (fmt) {
        case Format::json: {
            Json j;
            j["all_pass"] = report.all_pass;
            Json rows = Json::array();
            for (const auto& r : report.rows) {
                Json parts = Json::array();
                for (const auto& pr : r.parts)
                    parts.push_back(Json{{"partition", pr.lambda.to_string()},
                                         {"census", pr.census_count.get_str()},
                                         {"symbolic", pr.symbolic_count.get_str()},
                                         {"match", pr.match}});
                rows.push_back(Json{{"d", r.d},
                                    {"n", r.n},
                                    {"p", r.p},
                                    {"sieve", r.sieve_count.get_str()},
                                    {"symbolic", r.symbolic_count.get_str()},
                                    {"pass", r.pass},
                                    {"census", std::move(parts)}});
            }
            j["rows"] = std::move(rows);
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "d,n,p,partition,census,symbolic,match\n";
            for (const auto& r : report.rows)
                for (const auto& pr : r.parts)
                    os << r.d << "," << r.n << "," << r.p << "," << pr.lambda.to_string() << ","
                       << pr.census_count.get_str() << "," << pr.symbolic_count.get_str() << ","
                       << (pr.match ? 1 : 0) << "\n";
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "brute-force cross-validation (" << (report.all_pass ? "PASS" : "FAIL")
               << ")\n\n";
            os << "| d | n | p | partition | census | symbolic | match |\n" << md_table_rule(7);
            for (const auto& r : report.rows)
                for (const auto& pr : r.parts)
                    os << "| " << r.d << " | " << r.n << " | " << r.p << " | "
                       << pr.lambda.to_string() << " | " << pr.census_count.get_str() << " | "
                       << pr.symbolic_count.get_str() << " | " << (pr.match ? "yes" : "NO")
                       << " |\n";
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

std::string emit_vanishing_audit(const VanishingAuditReport& report, Format fmt) {
    switch (fmt) {
        case Format::json: {
            Json j;
            j["d_max"] = report.d_max;
            j["convention"] = to_string(report.conv);
            j["all_ok"] = report.all_ok;
            Json rows = Json::array();
            for (const auto& r : report.rows)
                rows.push_back(Json{{"d", r.d},
                                    {"partition", r.lambda.to_string()},
                                    {"r", r.r_lambda},
                                    {"lowest", r.lowest},
                                    {"source", r.from_series ? "series" : "bound"},
                                    {"ok", r.ok}});
            j["strata"] = std::move(rows);
            Json sums = Json::array();
            for (const auto& s : report.summaries) {
                Json entry{{"d", s.d},
                           {"red_lowest", s.red_lowest},
                           {"irr_lowest", s.irr_lowest},
                           {"vanish_through", s.vanish_through},
                           {"covers_2d", s.covers_2d}};
                if (s.known_first_nonzero >= 0)
                    entry["first_nonzero"] = s.known_first_nonzero;
                sums.push_back(std::move(entry));
            }
            j["summaries"] = std::move(sums);
            return dump(j);
        }
        case Format::csv: {
            std::ostringstream os;
            os << "d,partition,r,lowest,source,ok\n";
            for (const auto& r : report.rows)
                os << r.d << "," << r.lambda.to_string() << "," << r.r_lambda << "," << r.lowest
                   << "," << (r.from_series ? "series" : "bound") << "," << (r.ok ? 1 : 0) << "\n";
            return os.str();
        }
        case Format::md: {
            std::ostringstream os;
            os << "vanishing audit through d=" << report.d_max << " ("
               << (report.all_ok ? "PASS" : "FAIL") << ")\n\n";
            os << "| d | partition | r | lowest | source | ok |\n" << md_table_rule(6);
            for (const auto& r : report.rows)
                os << "| " << r.d << " | " << r.lambda.to_string() << " | " << r.r_lambda << " | "
                   << r.lowest << " | " << (r.from_series ? "series" : "bound") << " | "
                   << (r.ok ? "yes" : "NO") << " |\n";
            os << "\n";
            for (const auto& s : report.summaries) {
                os << "- d=" << s.d << ": stable b_k = 0 for k <= " << s.vanish_through
                   << (s.covers_2d ? " (covers k <= 2d)" : " (!) does not cover k <= 2d");
                if (s.known_first_nonzero >= 0)
                    os << "; first nonzero at " << s.known_first_nonzero;
                os << "\n";
            }
            return os.str();
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace irrpoly
