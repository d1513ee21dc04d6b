#include "cftnvm/serialize.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace cftnvm;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output path " + out_path);
    file << text;
    if (!file) throw std::runtime_error("cannot write output path " + out_path);
}

// q takes precedence; explicit p and m only cross-check the factorization.
Field resolve_field(unsigned long q, unsigned long p, unsigned long m) {
    if (q == 0) {
        if (p == 0) throw std::invalid_argument("provide --q, or --p with optional --m");
        if (m == 0) m = 1;
        q = 1;
        for (unsigned long i = 0; i < m; ++i) {
            if (q > Field::max_field_size() / p) {
                throw std::invalid_argument("field size exceeds the supported cap");
            }
            q *= p;
        }
    }
    auto [fp, fm] = factor_prime_power(q);
    if (p != 0 && p != fp) throw std::invalid_argument("q is not a power of the given p");
    if (m != 0 && m != fm) throw std::invalid_argument("q does not match the given degree m");
    return Field(fp, fm);
}

SubgroupChar resolve_char(const Field& f, unsigned long index, unsigned long j) {
    Subgroup H(f, index);
    if (j >= H.order()) {
        throw std::invalid_argument("--chi must be below the subgroup order " +
                                    std::to_string(H.order()));
    }
    return SubgroupChar(H, j);
}

std::string poly_str(const std::vector<unsigned long>& coeffs) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0 || coeffs[i] != 1) out << coeffs[i];
        if (i >= 1) {
            out << "x";
            if (i >= 2) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

std::string index_list(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

std::string report_table(const NvmReport& r) {
    auto opt = [](const std::optional<bool>& b) {
        return b ? (*b ? std::string("true") : std::string("false")) : std::string("-");
    };
    std::ostringstream out;
    out << "q: " << r.q << "\n"
        << "p: " << r.p << "\n"
        << "m: " << r.m << "\n"
        << "index: " << r.index << "\n"
        << "chi_j: " << r.chi_j << "\n"
        << "method: " << to_string(r.method) << "\n"
        << "holds: " << (r.holds ? "true" : "false") << "\n"
        << "theorem_prediction: " << opt(r.theorem_prediction) << "\n"
        << "agreement: " << opt(r.agreement) << "\n";
    if (r.witness) {
        out << "witness rows: " << index_list(r.witness->rows) << "\n"
            << "witness cols: " << index_list(r.witness->cols) << "\n";
    } else {
        out << "witness: none\n";
    }
    out << "minors_checked: " << r.minors_checked << "\n";
    return out.str();
}

std::string render_report(const NvmReport& r, const std::string& format) {
    if (format == "json") return to_json(r).dump() + "\n";
    if (format == "csv") return report_csv_header() + "\n" + report_csv_row(r) + "\n";
    return report_table(r);
}

struct Args {
    unsigned long q = 0;
    unsigned long p = 0;
    unsigned long m = 0;
    unsigned long index = 1;
    unsigned long chi = 0;
    unsigned long q_max = 0;
    std::string method = "both";
    std::string chars = "all";
    std::string format = "json";
    std::string out;
    unsigned threads = 1;
};

int cmd_field(const Args& a) {
    Field f = resolve_field(a.q, a.p, a.m);
    if (a.format == "json") {
        ordered_json j = field_spec_json(f);
        ordered_json trace = ordered_json::array();
        for (const auto& x : f.elements()) trace.push_back(f.trace(x));
        j["trace"] = std::move(trace);
        emit(j.dump() + "\n", a.out);
        return 0;
    }
    std::ostringstream out;
    out << "q: " << f.q() << "\n"
        << "p: " << f.p() << "\n"
        << "m: " << f.m() << "\n"
        << "modulus: " << poly_str(f.modulus()) << "\n"
        << "generator: " << f.generator().str() << "\n";
    for (const auto& x : f.elements()) {
        out << "Tr(" << x.str() << ") = " << f.trace(x) << "\n";
    }
    emit(out.str(), a.out);
    return 0;
}

int cmd_gauss(const Args& a) {
    Field f = resolve_field(a.q, a.p, a.m);
    SubgroupChar chi = resolve_char(f, a.index, a.chi);
    GaussSumSet g = gauss_set(chi);
    if (a.format == "json") {
        ordered_json j{{"q", f.q()}, {"index", chi.subgroup().index()}, {"chi_j", chi.j()}};
        ordered_json sums = ordered_json::array();
        for (std::size_t i = 0; i < g.sums.size(); ++i) {
            sums.push_back(ordered_json{{"exponent", g.exponents[i]},
                                        {"exact", to_json(g.sums[i])},
                                        {"approx", approx_string(g.sums[i])}});
        }
        j["sums"] = std::move(sums);
        if (chi.subgroup().index() == 3) {
            TSums t = t_sums(g);
            ordered_json ts = ordered_json::array();
            for (const auto& v : t.t) {
                ts.push_back(ordered_json{{"exact", to_json(v)}, {"approx", approx_string(v)}});
            }
            j["t_sums"] = std::move(ts);
        }
        emit(j.dump() + "\n", a.out);
        return 0;
    }
    std::ostringstream out;
    out << "q: " << f.q() << "  index: " << chi.subgroup().index() << "  chi_j: " << chi.j()
        << "\n";
    for (std::size_t i = 0; i < g.sums.size(); ++i) {
        out << "G_" << i << " (exponent " << g.exponents[i] << "): " << g.sums[i].str()
            << "  approx " << approx_string(g.sums[i]) << "\n";
    }
    if (chi.subgroup().index() == 3) {
        TSums t = t_sums(g);
        for (std::size_t i = 0; i < t.t.size(); ++i) {
            out << "T_" << i << ": " << t.t[i].str() << "  approx " << approx_string(t.t[i])
                << "\n";
        }
    }
    emit(out.str(), a.out);
    return 0;
}

int cmd_cft(const Args& a) {
    Field f = resolve_field(a.q, a.p, a.m);
    SubgroupChar chi = resolve_char(f, a.index, a.chi);
    CftMatrix M = cft_matrix(chi);
    if (a.format == "json") {
        emit(to_json(M).dump() + "\n", a.out);
        return 0;
    }
    std::ostringstream out;
    out << "chi: index " << chi.subgroup().index() << ", j " << chi.j() << "\n";
    out << "S \\ R";
    for (const auto& r : M.R) out << "\t" << r.str();
    out << "\n";
    for (std::size_t i = 0; i < M.matrix.rows(); ++i) {
        out << M.S[i].str();
        for (std::size_t j = 0; j < M.matrix.cols(); ++j) out << "\t" << M.matrix.at(i, j).str();
        out << "\n";
    }
    emit(out.str(), a.out);
    return 0;
}

NvmMethod parse_method(const std::string& name) {
    if (name == "brute") return NvmMethod::brute;
    if (name == "theorem") return NvmMethod::theorem;
    return NvmMethod::both;
}

int cmd_nvm(const Args& a) {
    Field f = resolve_field(a.q, a.p, a.m);
    SubgroupChar chi = resolve_char(f, a.index, a.chi);
    NvmReport r = nvm_instance(chi, parse_method(a.method));
    emit(render_report(r, a.format), a.out);
    return r.agreement && !*r.agreement ? 1 : 0;
}

int cmd_chebotarev(const Args& a) {
    NvmReport r = chebotarev_check(a.p);
    emit(render_report(r, a.format), a.out);
    return 0;
}

CharSelector parse_chars(const std::string& name) {
    if (name == "trivial") return CharSelector::trivial;
    if (name == "nontrivial") return CharSelector::nontrivial;
    return CharSelector::all;
}

int cmd_scan(const Args& a) {
    std::vector<NvmReport> reports = scan_range(a.q_max, a.index, parse_chars(a.chars), a.threads);
    std::string body;
    if (a.format == "csv") {
        body = report_csv_header() + "\n";
        for (const auto& r : reports) body += report_csv_row(r) + "\n";
    } else {
        for (const auto& r : reports) body += to_json(r).dump() + "\n";
    }
    emit(body, a.out);
    std::size_t holds = 0, fails = 0, disagreements = 0;
    for (const auto& r : reports) {
        (r.holds ? holds : fails) += 1;
        if (r.agreement && !*r.agreement) ++disagreements;
    }
    std::cerr << "scanned " << reports.size() << " instances: holds " << holds << ", fails "
              << fails << ", disagreements " << disagreements << "\n";
    return disagreements > 0 ? 1 : 0;
}

int cmd_witness(const Args& a) {
    Field f = resolve_field(a.q, a.p, a.m);
    SubgroupChar chi = resolve_char(f, a.index, a.chi);
    CftMatrix M = cft_matrix(chi);
    NvmReport r = nvm_brute(M.matrix);
    if (r.holds) {
        if (a.format == "json") {
            ordered_json j{{"q", f.q()},
                           {"index", chi.subgroup().index()},
                           {"chi_j", chi.j()},
                           {"holds", true}};
            emit(j.dump() + "\n", a.out);
        } else {
            emit("nonvanishing minors property holds\n", a.out);
        }
        return 0;
    }
    GroupAlgebraElement w = violation_witness(M, *r.witness, chi);
    BoundCheck bound = uncertainty_bound_report(w, chi);
    if (a.format == "json") {
        ordered_json j{{"q", f.q()},
                       {"index", chi.subgroup().index()},
                       {"chi_j", chi.j()},
                       {"holds", false}};
        j["minor"] = ordered_json{{"I", r.witness->rows}, {"J", r.witness->cols}};
        j["f"] = to_json(w);
        ordered_json supp = ordered_json::array();
        for (const auto& x : support(w)) supp.push_back(element_json(x));
        j["support"] = std::move(supp);
        ordered_json supp_hat = ordered_json::array();
        for (const auto& psi : support_hat(w)) supp_hat.push_back(element_json(psi.a()));
        j["support_hat"] = std::move(supp_hat);
        j["support_size"] = bound.support;
        j["hat_support_size"] = bound.hat_support;
        j["bound"] = bound.threshold;
        j["total"] = bound.support + bound.hat_support;
        emit(j.dump() + "\n", a.out);
        return 0;
    }
    std::ostringstream out;
    out << "q: " << f.q() << "  index: " << chi.subgroup().index() << "  chi_j: " << chi.j()
        << "\n"
        << "holds: false\n"
        << "minor rows: " << index_list(r.witness->rows) << "\n"
        << "minor cols: " << index_list(r.witness->cols) << "\n";
    for (const auto& x : f.elements()) {
        if (!w[x].is_zero()) out << "f[" << x.str() << "] = " << w[x].str() << "\n";
    }
    out << "support size: " << bound.support << "\n"
        << "transform support size: " << bound.hat_support << "\n"
        << "bound: " << bound.threshold << "\n"
        << "total: " << bound.support + bound.hat_support << "\n";
    emit(out.str(), a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("CFT_NVM_MAX_ORDER")) {
        char* end = nullptr;
        unsigned long cap = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || cap == 0) {
            std::cerr << "error: CFT_NVM_MAX_ORDER must be a positive integer\n";
            return 2;
        }
        set_max_cyclotomic_order(cap);
    }

    CLI::App app{"exact finite-field Fourier toolkit: Gauss sums, compressed transforms, "
                 "and nonvanishing-minors certificates"};
    app.require_subcommand(1);
    Args a;

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--q", a.q, "field size as a prime power");
        cmd->add_option("--p", a.p, "field characteristic (cross-checked against --q)");
        cmd->add_option("--m", a.m, "extension degree (cross-checked against --q)");
    };
    auto add_char_opts = [&](CLI::App* cmd) {
        cmd->add_option("--index", a.index, "multiplicative subgroup index")->required();
        cmd->add_option("--chi", a.chi, "character exponent on the subgroup");
    };
    auto add_out_opts = [&](CLI::App* cmd, std::vector<std::string> formats) {
        cmd->add_option("--format", a.format, "output format")
            ->check(CLI::IsMember(std::move(formats)));
        cmd->add_option("--out", a.out, "write output to this path instead of stdout");
    };

    CLI::App* field = app.add_subcommand("field", "print the field construction");
    add_field_opts(field);
    add_out_opts(field, {"json", "table"});

    CLI::App* gauss = app.add_subcommand("gauss", "print Gauss sums of all character extensions");
    add_field_opts(gauss);
    add_char_opts(gauss);
    add_out_opts(gauss, {"json", "table"});

    CLI::App* cft = app.add_subcommand("cft", "print the compressed Fourier matrix");
    add_field_opts(cft);
    add_char_opts(cft);
    add_out_opts(cft, {"json", "table"});

    CLI::App* nvm = app.add_subcommand("nvm", "decide the nonvanishing minors property");
    add_field_opts(nvm);
    add_char_opts(nvm);
    nvm->add_option("--method", a.method, "decision method")
        ->check(CLI::IsMember({"brute", "theorem", "both"}));
    add_out_opts(nvm, {"json", "csv", "table"});

    CLI::App* cheb = app.add_subcommand("chebotarev", "check all minors of the prime root matrix");
    cheb->add_option("--p", a.p, "prime size")->required();
    add_out_opts(cheb, {"json", "csv", "table"});

    CLI::App* scan = app.add_subcommand("scan", "decide every instance up to a size limit");
    scan->add_option("--q-max", a.q_max, "largest field size to include")->required();
    scan->add_option("--index", a.index, "multiplicative subgroup index")->required();
    scan->add_option("--chars", a.chars, "character filter")
        ->check(CLI::IsMember({"all", "trivial", "nontrivial"}));
    scan->add_option("--threads", a.threads, "worker thread count")->check(CLI::Range(1u, 64u));
    add_out_opts(scan, {"json", "csv"});

    CLI::App* witness = app.add_subcommand("witness", "emit a bound-violating element if one exists");
    add_field_opts(witness);
    add_char_opts(witness);
    add_out_opts(witness, {"json", "table"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (field->parsed()) return cmd_field(a);
        if (gauss->parsed()) return cmd_gauss(a);
        if (cft->parsed()) return cmd_cft(a);
        if (nvm->parsed()) return cmd_nvm(a);
        if (cheb->parsed()) return cmd_chebotarev(a);
        if (scan->parsed()) return cmd_scan(a);
        if (witness->parsed()) return cmd_witness(a);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
