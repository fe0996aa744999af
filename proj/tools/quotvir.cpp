// quotvir: exact generating series and verification for virtual tautological
// integrals over Quot schemes of surfaces.
//
// Every coefficient is emitted as an exact fraction string; nothing is ever
// rounded. Exit codes: 0 success, 1 usage error, 2 data error, 3 verification
// failure.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <quotvir/chow.hpp>
#include <quotvir/invariants.hpp>
#include <quotvir/universal.hpp>
#include <quotvir/verify.hpp>

namespace {

using nlohmann::json;
using namespace quotvir;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct report {
    std::string command;
    bool as_json = false;
    json setup = json::object();
    json coefficients = json::array();
    json checks = json::array();
    json extra = json::object();

    void add_coefficient(int l, const std::string& value)
    {
        coefficients.push_back(json{{"l", l}, {"value", value}});
    }

    void add_series(const series<rational>& s)
    {
        for (int l = 0; l <= s.order(); ++l)
            add_coefficient(l, s[l].str());
    }

    void add_check(const std::string& name, bool passed, const std::string& detail)
    {
        checks.push_back(json{{"name", name}, {"status", passed ? "pass" : "fail"},
                              {"detail", detail}});
    }

    bool all_checks_pass() const
    {
        for (const auto& c : checks)
            if (c.at("status") != "pass")
                return false;
        return true;
    }

    void emit(std::ostream& os) const
    {
        if (as_json) {
            json j{{"command", command},
                   {"setup", setup},
                   {"coefficients", coefficients},
                   {"checks", checks}};
            for (const auto& [k, v] : extra.items())
                j[k] = v;
            os << j.dump(2) << "\n";
            return;
        }
        os << "# quotvir " << command;
        if (!setup.empty())
            os << "  " << setup.dump();
        os << "\n";
        for (const auto& c : coefficients)
            os << c.at("l").get<int>() << "\t" << c.at("value").get<std::string>() << "\n";
        for (const auto& [k, v] : extra.items())
            os << k << "\t" << v.dump() << "\n";
        for (const auto& c : checks)
            os << (c.at("status") == "pass" ? "PASS" : "FAIL") << " "
               << c.at("name").get<std::string>() << " -- " << c.at("detail").get<std::string>()
               << "\n";
    }
};

// Options shared by the subcommands; flag values override config-file values.
struct cli_state {
    std::string config_path;
    bool as_json = false;
    bool verify_toggle = false;

    int rank = 1;
    int terms = 10;
    int power = -1;
    std::string chi, k2, m, a;
    std::string integrand = "euler-line";
    std::vector<std::string> pairing_flags;

    const CLI::App* active = nullptr; // the parsed subcommand

    json cfg = json::object();

    bool flag_given(const std::string& name) const
    {
        if (!active)
            return false;
        const CLI::Option* o = active->get_option_no_throw("--" + name);
        return o != nullptr && o->count() > 0;
    }

    void load_config()
    {
        if (config_path.empty())
            return;
        std::ifstream f(config_path);
        if (!f)
            throw error("cannot open config file '" + config_path + "'");
        try {
            f >> cfg;
        } catch (const json::exception& e) {
            throw error("malformed config: " + std::string(e.what()));
        }
        if (!cfg.is_object())
            throw error("malformed config: top level must be an object");
    }

    static std::string exact_string(const json& v, const std::string& key)
    {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_number_integer())
            return std::to_string(v.get<long long>());
        throw error("config value '" + key + "' must be a string or integer (floats lose exactness)");
    }

    std::string value(const std::string& key, const std::string& flag) const
    {
        if (flag_given(key))
            return flag;
        if (cfg.contains(key))
            return exact_string(cfg.at(key), key);
        throw usage_error("missing value for --" + key);
    }

    int int_value(const std::string& key, int flag, int fallback) const
    {
        if (flag_given(key))
            return flag;
        if (cfg.contains(key)) {
            if (!cfg.at(key).is_number_integer())
                throw error("config value '" + key + "' must be an integer");
            return cfg.at(key).get<int>();
        }
        return fallback;
    }

    int get_terms() const
    {
        int n = int_value("terms", terms, 10);
        if (n < 0 || n > 64)
            throw usage_error("--terms must lie in [0, 64]");
        return n;
    }

    int get_rank() const
    {
        int r = int_value("rank", rank, 1);
        if (r < 1)
            throw usage_error("--rank must be >= 1");
        return r;
    }

    std::map<std::string, rational> get_pairings() const
    {
        std::map<std::string, rational> out;
        if (cfg.contains("pairings")) {
            if (!cfg.at("pairings").is_object())
                throw error("config 'pairings' must be an object");
            for (const auto& [k, v] : cfg.at("pairings").items()) {
                symbols::require_known(k);
                out[k] = rational::parse(exact_string(v, k));
            }
        }
        for (const auto& p : pairing_flags) {
            auto eq = p.find('=');
            if (eq == std::string::npos)
                throw usage_error("--pairing expects key=value, got '" + p + "'");
            std::string k = p.substr(0, eq);
            symbols::require_known(k);
            out[k] = rational::parse(p.substr(eq + 1));
        }
        return out;
    }
};

series<rational> parse_series(const json& coeffs, const std::string& what)
{
    if (!coeffs.is_array() || coeffs.empty())
        throw error(what + ": 'coefficients' must be a nonempty array");
    std::vector<rational> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs)
        c.push_back(rational::parse(cli_state::exact_string(v, "coefficients")));
    return series<rational>::from_coefficients(std::move(c));
}

int run_gottsche(cli_state& st, report& rep)
{
    int n = st.get_terms(), r = st.get_rank();
    rational chi = rational::parse(st.value("chi", st.chi));
    rep.setup = {{"rank", r}, {"chi", chi.str()}, {"terms", n}};
    rep.add_series(gottsche_series<rational>(r, chi, n));
    return 0;
}

int run_chi_vir(cli_state& st, report& rep)
{
    int n = st.get_terms(), r = st.get_rank();
    rational k2 = rational::parse(st.value("k2", st.k2));
    rep.setup = {{"rank", r}, {"K2", k2.str()}, {"terms", n}};
    rep.add_series(chi_vir_series<rational>(r, k2, n));
    return 0;
}

int run_euler_top(cli_state& st, report& rep)
{
    int n = st.get_terms();
    rational m = rational::parse(st.value("m", st.m));
    rep.setup = {{"m", m.str()}, {"terms", n}};
    rep.add_series(euler_top_series<rational>(m, n));
    return 0;
}

int run_segre_line(cli_state& st, report& rep)
{
    int n = st.get_terms(), r = st.get_rank();
    rational a = rational::parse(st.value("a", st.a));
    rational k2 = rational::parse(st.value("k2", st.k2));
    rep.setup = {{"rank", r}, {"a", a.str()}, {"K2", k2.str()}, {"terms", n}};
    rep.add_series(segre_line_series<rational>(r, a, k2, n));
    return 0;
}

int run_shift_product(cli_state& st, report& rep)
{
    int n = st.get_terms(), r = st.get_rank();
    rep.setup = {{"rank", r}, {"terms", n}};
    rep.add_series(pairwise_shift_product(r, n));
    return 0;
}

int run_quot1_integral(cli_state& st, report& rep)
{
    int r = st.get_rank();
    std::string kind = st.flag_given("integrand")
                           ? st.integrand
                           : (st.cfg.contains("integrand")
                                  ? cli_state::exact_string(st.cfg.at("integrand"), "integrand")
                                  : st.integrand);
    quot_geometry g = quot_geometry::symbolic("E", r);
    integrand_expr e = integrand_one{};
    if (kind == "one")
        e = integrand_one{};
    else if (kind == "euler-line") {
        int p = st.int_value("power", st.power, r);
        if (p < 0)
            p = r;
        e = integrand_euler_line_pow{surface_class::divisor("c1L"), p};
    } else if (kind == "chern-tvir")
        e = integrand_chern_tvir{};
    else if (kind == "segre-line")
        e = integrand_segre_line{surface_class::divisor("c1L")};
    else
        throw usage_error("unknown integrand '" + kind + "'");

    auto pairings = st.get_pairings();
    pairing_table table =
        pairings.empty() ? pairing_table::symbolic() : pairing_table::numeric_values(pairings);
    poly result = quot1_virtual_integral(instantiate(e, g), table);
    rep.setup = {{"rank", r}, {"integrand", kind}, {"mode", pairings.empty() ? "symbolic" : "numeric"}};
    rep.add_coefficient(1, result.is_constant() ? result.constant_value().str() : result.str());
    return 0;
}

int run_extract_universal(cli_state& st, report& rep)
{
    if (!st.cfg.contains("samples") || !st.cfg.contains("symbols"))
        throw error("extract-universal needs a config with 'symbols' and 'samples'");
    std::vector<std::string> syms;
    for (const auto& s : st.cfg.at("symbols"))
        syms.push_back(s.get<std::string>());
    std::vector<universal_sample> samples;
    int min_order = std::numeric_limits<int>::max();
    for (const auto& s : st.cfg.at("samples")) {
        exponent_map e;
        for (const auto& [k, v] : s.at("exponents").items())
            e[k] = rational::parse(cli_state::exact_string(v, k));
        series<rational> val = parse_series(s.at("coefficients"), "extract-universal");
        min_order = std::min(min_order, val.order());
        samples.emplace_back(std::move(e), std::move(val));
    }
    if (samples.empty())
        throw error("extract-universal: no samples");
    int order = st.int_value("order", 0, min_order);
    universal_series u = universal_extract(syms, samples, order);
    json factors = json::object();
    for (const auto& [name, base] : u.factors) {
        json arr = json::array();
        for (int l = 0; l <= base.order(); ++l)
            arr.push_back(base[l].str());
        factors[name] = arr;
    }
    rep.setup = {{"symbols", syms}, {"order", order}};
    rep.extra["factors"] = factors;
    return 0;
}

int run_collapse(cli_state& st, report& rep)
{
    if (!st.cfg.contains("entries"))
        throw error("collapse needs a config with 'degree', 'rank_e', 'rank_f', 'entries'");
    homogeneous_universal_poly p;
    p.degree = st.int_value("degree", 0, -1);
    p.rank_e = st.int_value("rank_e", 0, 1);
    p.rank_f = st.int_value("rank_f", 0, 1);
    for (const auto& entry : st.cfg.at("entries")) {
        int i = entry.at("i").get<int>(), j = entry.at("j").get<int>(), k = entry.at("k").get<int>();
        p.coeffs[{i, j, k}] = rational::parse(cli_state::exact_string(entry.at("value"), "value"));
    }
    std::vector<rational> collapsed = collapse_universal_polynomial(p);
    rep.setup = {{"degree", p.degree}, {"rank_e", p.rank_e}, {"rank_f", p.rank_f}};
    for (size_t i = 0; i < collapsed.size(); ++i)
        rep.add_coefficient(static_cast<int>(i), collapsed[i].str());
    return 0;
}

int run_verify(report& rep)
{
    for (const auto& r : verify::run_all())
        rep.add_check(r.name, r.passed, r.detail);
    return rep.all_checks_pass() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact virtual tautological invariants of Quot schemes of surfaces"};
    app.require_subcommand(1);

    cli_state st;
    std::string command;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", st.as_json, "emit a JSON report instead of a table");
        sub->add_flag("--verify", st.verify_toggle, "also run the verification suite");
        sub->add_option("--config", st.config_path, "JSON config file; flags override its values");
        sub->add_option("--terms", st.terms, "truncation order N (<= 64)");
        sub->callback([&, sub] { command = sub->get_name(); st.active = sub; });
    };

    auto* gottsche = app.add_subcommand("gottsche", "topological Euler series");
    add_common(gottsche);
    gottsche->add_option("--rank", st.rank, "rank of E");
    gottsche->add_option("--chi", st.chi, "chi_top(S), exact");

    auto* chivir = app.add_subcommand("chi-vir", "virtual Euler characteristic series");
    add_common(chivir);
    chivir->add_option("--rank", st.rank, "rank of E");
    chivir->add_option("--k2", st.k2, "c1(S)^2, exact");

    auto* eulertop = app.add_subcommand("euler-top", "top Euler-class series (1-q)^{-m}");
    add_common(eulertop);
    eulertop->add_option("--m", st.m, "c1(E⊗L)c1(S), exact");

    auto* segre = app.add_subcommand("segre-line", "virtual Segre series of a line bundle");
    add_common(segre);
    segre->add_option("--rank", st.rank, "rank of E");
    segre->add_option("--a", st.a, "c1(E⊗L)c1(S), exact");
    segre->add_option("--k2", st.k2, "c1(S)^2, exact");

    auto* shift = app.add_subcommand("shift-product", "pairwise root-shift product via resultants");
    add_common(shift);
    shift->add_option("--rank", st.rank, "rank of E");

    auto* quot1 = app.add_subcommand("quot1-integral", "length-1 virtual integral on P(E)");
    add_common(quot1);
    quot1->add_option("--rank", st.rank, "rank of E");
    quot1->add_option("--integrand", st.integrand,
                                         "one | euler-line | chern-tvir | segre-line");
    quot1->add_option("--power", st.power, "power for euler-line (default: rank)");
    quot1->add_option("--pairing", st.pairing_flags,
                      "numeric pairing key=value (repeatable); omit for symbolic output");

    auto* extract = app.add_subcommand("extract-universal", "recover universal factors from samples");
    add_common(extract);

    auto* collapse = app.add_subcommand("collapse", "collapse a homogeneous universal polynomial");
    add_common(collapse);

    auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    report rep;
    rep.command = command;
    rep.as_json = st.as_json;
    int status = 0;
    try {
        st.load_config();
        if (command == "gottsche")
            status = run_gottsche(st, rep);
        else if (command == "chi-vir")
            status = run_chi_vir(st, rep);
        else if (command == "euler-top")
            status = run_euler_top(st, rep);
        else if (command == "segre-line")
            status = run_segre_line(st, rep);
        else if (command == "shift-product")
            status = run_shift_product(st, rep);
        else if (command == "quot1-integral")
            status = run_quot1_integral(st, rep);
        else if (command == "extract-universal")
            status = run_extract_universal(st, rep);
        else if (command == "collapse")
            status = run_collapse(st, rep);
        else if (command == "verify")
            status = run_verify(rep);
        else
            throw usage_error("unknown command '" + command + "'");
        if (st.verify_toggle && command != "verify") {
            int vstatus = run_verify(rep);
            status = status != 0 ? status : vstatus;
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const quotvir::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    rep.emit(std::cout);
    return status;
}
