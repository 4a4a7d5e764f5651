#ifndef DLTZETA_CLI_HPP
#define DLTZETA_CLI_HPP

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

namespace dltz {

namespace cli {

enum Exit { ok = 0, not_certified = 1, input_error = 2 };

struct Session {
    std::string poly;
    std::string fan;
    std::vector<std::string> fans; // compare: A and B
    std::string format = "text";
    std::string mode = "dlt";
    std::string filter, filter_a, filter_b;
    std::string stratum;
    std::string at;
    std::string label;
    std::size_t order = 4;
    int extra = 0;
};

/// "ρ_y", "ρ₂", "rho_2" and the like become plain labels "y", "2".
inline std::string ascii_ray_names(const std::string &s)
{
    static const std::vector<std::pair<std::string, std::string>> subs = {
        {"ρ_", ""}, {"ρ", ""},   {"rho_", ""}, {"\\rho_", ""}, {"₀", "0"}, {"₁", "1"}, {"₂", "2"}, {"₃", "3"},
        {"₄", "4"}, {"₅", "5"}, {"₆", "6"},   {"₇", "7"},     {"₈", "8"}, {"₉", "9"}, {"∩", " cap "}};
    std::string out = s;
    for (const auto &[from, to] : subs) {
        std::size_t pos = 0;
        while ((pos = out.find(from, pos)) != std::string::npos) {
            out.replace(pos, from.size(), to);
            pos += to.size();
        }
    }
    return out;
}

inline LatticeVector parse_vector(const std::string &text)
{
    std::string s;
    for (char c : text)
        s += (c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : (c == ',' ? ' ' : c);
    std::istringstream in(s);
    LatticeVector v;
    std::string tok;
    while (in >> tok) {
        try {
            v.emplace_back(tok);
        } catch (const std::invalid_argument &) {
            throw Error(Errc::invalid_argument, "'" + text + "' is not an integer vector");
        }
    }
    if (v.empty())
        throw Error(Errc::invalid_argument, "empty vector '" + text + "'");
    return v;
}

inline void require_rank(const Fan &fan, const LatticeVector &v)
{
    if (v.size() != fan.rank)
        throw Error(Errc::invalid_argument, "vector " + to_string(v) + " has length " + std::to_string(v.size()) +
                                                ", fan has rank " + std::to_string(fan.rank));
}

inline void require_variables(const Polynomial &f, const Fan &fan)
{
    if (f.nvars != fan.rank)
        throw Error(Errc::invalid_argument, "polynomial has " + std::to_string(f.nvars) +
                                                " variables but the fan has rank " + std::to_string(fan.rank));
}

inline std::optional<ClosedSet> filter_of(const Fan &fan, const std::string &spec)
{
    if (spec.empty())
        return std::nullopt;
    return parse_closed_set(fan, ascii_ray_names(spec));
}

struct Loaded {
    Polynomial f;
    Fan fan;
};

class Runner {
public:
    Runner(const Session &s, std::ostream &out, std::ostream &err) : s_(s), out_(out), err_(err) {}

    Fan fan(const std::string &path)
    {
        std::vector<std::string> warnings;
        Fan f = load_fan(path, &warnings);
        for (const auto &w : warnings)
            err_ << path << ": " << w << "\n";
        return f;
    }

    Loaded load(const std::string &fan_path)
    {
        Loaded l{load_polynomial(s_.poly), fan(fan_path)};
        require_variables(l.f, l.fan);
        return l;
    }

    bool json() const { return s_.format == "json"; }
    bool latex() const { return s_.format == "latex"; }

    void emit(const dltz::json &j) { out_ << j.dump(2) << "\n"; }

    /// Certifies the model for dlt-mode computations; prints the failing
    /// checks and returns false when it is not a dlt modification.
    bool certified(const Loaded &l, const std::string &path)
    {
        DltCertificate c = certify_dlt_modification(l.f, l.fan);
        if (c.valid())
            return true;
        if (json()) {
            emit({{"error", "not certified"}, {"fan", path}, {"failures", c.failures}});
        } else {
            out_ << path << ": not a dlt modification\n";
            for (const auto &f : c.failures)
                out_ << "  failure: " << f << "\n";
        }
        return false;
    }

    ZetaReport zeta(const Loaded &l, const std::string &filter)
    {
        auto flt = filter_of(l.fan, filter);
        if (s_.mode == "dl")
            return dl_zeta(l.f, l.fan, flt);
        DltCertificate c = certify_dlt_modification(l.f, l.fan);
        return dlt_zeta(l.f, l.fan, flt, c.assumptions);
    }

    int raydata()
    {
        Loaded l = load(s_.fan);
        std::vector<RayData> t = ray_table(l.f, l.fan);
        if (json()) {
            emit({{"rays", ray_table_json(l.fan, t)}});
        } else if (latex()) {
            out_ << "\\begin{tabular}{cccc}\nray & $u$ & $N$ & $\\nu$\\\\\\hline\n";
            for (std::size_t i = 0; i < t.size(); ++i)
                out_ << "$\\rho_{" << l.fan.labels[i] << "}$ & $" << to_string(t[i].ray) << "$ & " << t[i].N << " & "
                     << t[i].nu << "\\\\\n";
            out_ << "\\end{tabular}\n";
        } else {
            for (std::size_t i = 0; i < t.size(); ++i)
                out_ << l.fan.labels[i] << " " << to_string(t[i].ray) << " N=" << t[i].N << " nu=" << t[i].nu << "\n";
        }
        return ok;
    }

    int certify()
    {
        Loaded l = load(s_.fan);
        DltCertificate c = certify_dlt_modification(l.f, l.fan);
        if (json())
            emit(to_json(c));
        else if (latex())
            out_ << "\\begin{verbatim}\n" << text(c) << "\\end{verbatim}\n";
        else
            out_ << text(c);
        return c.valid() ? ok : not_certified;
    }

    int discrepancy()
    {
        Loaded l = load(s_.fan);
        LatticeVector u = parse_vector(s_.at);
        require_rank(l.fan, u);
        Rational a = log_discrepancy(l.f, l.fan, u);
        auto carrier = carrier_cone(l.fan, u);
        RayData rd = newton_data(l.f, u);
        if (json())
            emit({{"u", to_json(u)},
                  {"a", to_string(a)},
                  {"N", rd.N.get_str()},
                  {"nu", rd.nu.get_str()},
                  {"carrier", cone_json(l.fan, *carrier)}});
        else if (latex())
            out_ << "a_{" << to_string(u) << "}=" << latex_rational(a) << "\n";
        else
            out_ << "a" << to_string(u) << " = " << to_string(a) << " (N=" << rd.N << ", nu=" << rd.nu
                 << ", carrier " << l.fan.cone_label(*carrier) << ")\n";
        return ok;
    }

    int different()
    {
        Loaded l = load(s_.fan);
        Stratum st = parse_stratum(l.fan, ascii_ray_names(s_.stratum));
        StratumDivisor d = different_on_stratum(l.f, l.fan, st, s_.extra);
        if (json()) {
            emit(to_json(l.fan, d));
        } else {
            std::string sum;
            for (const auto &c : d.components) {
                if (!sum.empty())
                    sum += latex() ? "+" : " + ";
                sum += latex() ? latex_rational(c.coefficient) + "\\," + c.name(l.fan)
                               : to_string(c.coefficient) + "*" + c.name(l.fan);
            }
            out_ << (latex() ? "D_{" : "D") << stratum_name(l.fan, st) << (latex() ? "}" : "") << " = "
                 << (sum.empty() ? "0" : sum) << "\n";
        }
        return ok;
    }

    int stringy()
    {
        Loaded l = load(s_.fan);
        Stratum st = parse_stratum(l.fan, ascii_ray_names(s_.stratum));
        StringyValue v = stratum_pair_stringy(l.f, l.fan, st, s_.extra);
        if (json())
            emit({{"stratum", stratum_name(l.fan, st)}, {"stringy", to_json(v)}});
        else if (latex())
            out_ << "\\mathcal{E}_{st}(\\mathring{E}_{" << stratum_name(l.fan, st) << "},\\mathring{D}_{"
                 << stratum_name(l.fan, st) << "})=" << dltz::latex(v) << "\n";
        else
            out_ << "E_st" << stratum_name(l.fan, st) << " = " << v.str() << "\n";
        return ok;
    }

    int zeta_cmd()
    {
        Loaded l = load(s_.fan);
        if (s_.mode == "dlt" && !certified(l, s_.fan))
            return not_certified;
        ZetaReport r = zeta(l, s_.filter);
        if (json())
            emit(to_json(r));
        else if (latex())
            out_ << dltz::latex(r) << "\n";
        else
            out_ << text(r);
        return ok;
    }

    int compare()
    {
        if (s_.fans.size() != 2)
            throw Error(Errc::invalid_argument, "compare needs exactly two fans");
        Loaded a = load(s_.fans[0]), b = load(s_.fans[1]);
        if (s_.mode == "dlt" && (!certified(a, s_.fans[0]) || !certified(b, s_.fans[1])))
            return not_certified;
        ZetaReport za = zeta(a, s_.filter_a.empty() ? s_.filter : s_.filter_a);
        ZetaReport zb = zeta(b, s_.filter_b.empty() ? s_.filter : s_.filter_b);
        Comparison c = compare_zeta(za, zb);
        if (json()) {
            emit({{"equal", c.equal},
                  {"a", to_json(za)},
                  {"b", to_json(zb)},
                  {"difference", to_json(c.difference)},
                  {"normal_form", to_json(c.normal_form)}});
        } else if (latex()) {
            out_ << (c.equal ? "Z_A(s)=Z_B(s)" : "Z_A(s)-Z_B(s)&=" + dltz::latex(c.difference)) << "\n";
        } else {
            out_ << (c.equal ? "EQUAL" : "NOT EQUAL") << "\n";
            if (!c.equal) {
                out_ << "difference: " << c.difference.str() << "\n";
                out_ << "normal form: " << normal_form_text(c.normal_form) << "\n";
            }
        }
        return ok;
    }

    int poles()
    {
        Loaded l = load(s_.fan);
        if (s_.mode == "dlt" && !certified(l, s_.fan))
            return not_certified;
        PoleReport p = pole_report(zeta(l, s_.filter));
        if (json())
            emit(to_json(p));
        else
            out_ << text(p);
        return ok;
    }

    int expand()
    {
        Loaded l = load(s_.fan);
        if (s_.mode == "dlt" && !certified(l, s_.fan))
            return not_certified;
        TSeries ser = series_expand(zeta(l, s_.filter).expr, s_.order);
        if (json()) {
            dltz::json a = dltz::json::array();
            for (const auto &c : ser)
                a.push_back(to_json(c));
            emit({{"order", s_.order}, {"coefficients", a}});
        } else {
            for (std::size_t k = 0; k < ser.size(); ++k)
                out_ << (latex() ? "T^{" : "T^") << k << (latex() ? "}: " : ": ")
                     << (latex() ? dltz::latex(ser[k]) : ser[k].str()) << "\n";
        }
        return ok;
    }

    int subdivide()
    {
        Fan f = fan(s_.fan);
        LatticeVector v = parse_vector(s_.at);
        require_rank(f, v);
        Fan g = star_subdivision(f, v, s_.label);
        if (json() || s_.format == "text") {
            emit(fan_to_json(g));
        } else {
            out_ << "\\begin{verbatim}\n" << fan_to_json(g).dump(2) << "\n\\end{verbatim}\n";
        }
        return ok;
    }

private:
    const Session &s_;
    std::ostream &out_;
    std::ostream &err_;
};

} // namespace cli

/// Runs the command line; args excludes the program name.
inline int run_cli(const std::vector<std::string> &args, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    using namespace cli;
    Session s;
    CLI::App app{"dltzeta: dlt modifications and dlt motivic zeta functions of nondegenerate polynomials"};
    app.require_subcommand(1);
    auto common = [&](CLI::App *sub, bool needs_poly = true, bool needs_fan = true) {
        auto *p = sub->add_option("--poly", s.poly, "polynomial JSON file");
        if (needs_poly)
            p->required();
        if (needs_fan)
            sub->add_option("--fan", s.fan, "fan JSON file")->required();
        sub->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
    };
    auto modes = [&](CLI::App *sub) {
        sub->add_option("--mode", s.mode, "dlt or dl")->check(CLI::IsMember({"dlt", "dl"}));
        sub->add_option("--filter", s.filter, "closed toric set, e.g. \"V(y,2)\" or \"E1 cap E2\"");
    };

    auto *raydata = app.add_subcommand("raydata", "ray table (N, nu)");
    common(raydata);
    auto *certify = app.add_subcommand("certify", "dlt-modification certificate");
    common(certify);
    auto *disc = app.add_subcommand("discrepancy", "log discrepancy at a lattice vector");
    common(disc);
    disc->add_option("--at", s.at, "lattice vector, e.g. 3,1,3")->required();
    auto *diff = app.add_subcommand("different", "different on an lc stratum");
    common(diff);
    diff->add_option("--stratum", s.stratum, "stratum, e.g. 1,2 or 0,1,2 (0 is E0)")->required();
    diff->add_option("--extra", s.extra, "extra blow-ups in the resolution");
    auto *str = app.add_subcommand("stringy", "stringy motive of a stratum pair");
    common(str);
    str->add_option("--stratum", s.stratum, "stratum, e.g. 1,2 or 0,1,2 (0 is E0)")->required();
    str->add_option("--extra", s.extra, "extra blow-ups in the resolution");
    auto *zeta = app.add_subcommand("zeta", "dlt or Denef-Loeser zeta function");
    common(zeta);
    modes(zeta);
    auto *cmp = app.add_subcommand("compare", "compare the zeta functions of two models");
    common(cmp, true, false);
    cmp->add_option("fans", s.fans, "two fan JSON files")->required()->expected(2);
    modes(cmp);
    cmp->add_option("--filterA", s.filter_a, "filter for the first fan");
    cmp->add_option("--filterB", s.filter_b, "filter for the second fan");
    auto *poles = app.add_subcommand("poles", "candidate and detected poles");
    common(poles);
    modes(poles);
    auto *expand = app.add_subcommand("expand", "power series in T = L^(-s)");
    common(expand);
    modes(expand);
    expand->add_option("--order", s.order, "highest power of T")->required();
    auto *sub = app.add_subcommand("subdivide", "star subdivision of a fan");
    common(sub, false);
    sub->add_option("--at", s.at, "lattice vector of the new ray")->required();
    sub->add_option("--label", s.label, "label of the new ray");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return input_error;
    }

    Runner r(s, out, err);
    try {
        if (*raydata)
            return r.raydata();
        if (*certify)
            return r.certify();
        if (*disc)
            return r.discrepancy();
        if (*diff)
            return r.different();
        if (*str)
            return r.stringy();
        if (*zeta)
            return r.zeta_cmd();
        if (*cmp)
            return r.compare();
        if (*poles)
            return r.poles();
        if (*expand)
            return r.expand();
        if (*sub)
            return r.subdivide();
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case Errc::not_log_canonical:
        case Errc::not_regular:
            return not_certified;
        default:
            return input_error;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

} // namespace dltz

#endif
