// Command-line front end: build join/meet matrices on subsets of a finite
// lattice, evaluate closed-form determinants and inverses, compare them with
// the exact linear-algebra oracle, and run randomized verification campaigns.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "latmat/divisor.hpp"
#include "latmat/engine.hpp"
#include "latmat/error.hpp"
#include "latmat/oracle.hpp"
#include "latmat/poset.hpp"
#include "latmat/verify.hpp"

namespace {

using namespace latmat;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw ParseError("empty item in list '" + s + "'");
        out.push_back(item);
    }
    if (out.empty()) throw ParseError("empty list");
    return out;
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    for (const auto& item : split_commas(s)) out.push_back(parse_integer(item));
    return out;
}

PosetFunction make_function(const FinitePoset& host, const std::string& spec) {
    if (spec == "identity") return PosetFunction::identity(host);
    if (spec.rfind("constant:", 0) == 0)
        return PosetFunction::constant(host, parse_rational(spec.substr(9)));
    if (spec.rfind("linear:t=", 0) == 0)
        return PosetFunction::linear_shift(host, parse_rational(spec.substr(9)));
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open function file '" + spec + "'");
    return PosetFunction::from_lines(host, in);
}

void print_set(std::ostream& out, const char* name, const OrderedSubset& s) {
    out << name << ":";
    for (const auto& id : s.labels()) out << ' ' << id;
    out << "\n";
}

// Shared input state for build/det/inv. The host poset is pinned in place
// before any subset refers to it.
struct Inputs {
    std::string poset_file, chain, divisors, set_x, set_y;
    std::string fspec = "identity";
    std::string kind_str = "join";

    std::optional<FinitePoset> host;
    std::optional<OrderedSubset> x, y;
    std::optional<PosetFunction> f;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--poset", poset_file, "poset text file (elem/rel lines)");
        cmd->add_option("--chain", chain, "integer chain host, e.g. 1,2,3");
        cmd->add_option("--divisors", divisors, "divisor-lattice host from these integers");
        cmd->add_option("--set", set_x, "members of X (default: all listed chain/divisor values)");
        cmd->add_option("--set-y", set_y, "members of Y (default: X)");
        cmd->add_option("--f", fspec, "identity | constant:<r> | linear:t=<r> | <file>");
        cmd->add_option("--kind", kind_str, "join | meet")->check(CLI::IsMember({"join", "meet"}));
    }

    void materialize() {
        int sources = (!poset_file.empty()) + (!chain.empty()) + (!divisors.empty());
        if (sources != 1) throw ParseError("give exactly one of --poset, --chain, --divisors");

        std::vector<std::string> default_set;
        if (!poset_file.empty()) {
            std::ifstream in(poset_file);
            if (!in) throw ParseError("cannot open poset file '" + poset_file + "'");
            host.emplace(parse_poset_text(in));
            if (set_x.empty()) throw ParseError("--poset requires --set");
        } else if (!chain.empty()) {
            std::vector<Int> values = parse_int_list(chain);
            host.emplace(chain_poset(values));
            for (const Int& v : values) default_set.push_back(to_string(v));
        } else {
            std::vector<Int> values = parse_int_list(divisors);
            for (const Int& v : values)
                if (v <= 0) throw ParseError("--divisors needs positive integers");
            host.emplace(divisor_poset_containing(values));
            for (const Int& v : values) default_set.push_back(to_string(v));
        }

        std::vector<std::string> xs = set_x.empty() ? default_set : split_commas(set_x);
        x.emplace(OrderedSubset::from_labels(*host, xs));
        y.emplace(set_y.empty() ? *x : OrderedSubset::from_labels(*host, split_commas(set_y)));
        f.emplace(make_function(*host, fspec));
    }

    engine::MatrixSpec spec() const {
        return engine::MatrixSpec(engine::parse_kind(kind_str), *x, *y, *f);
    }
};

void print_header(const Inputs& in, const engine::MatrixSpec& spec, const RatMatrix& m) {
    std::cout << "kind: " << engine::kind_name(spec.kind) << "\n";
    print_set(std::cout, "X", *in.x);
    print_set(std::cout, "Y", *in.y);
    std::cout << "matrix:\n" << m.to_text();
}

int cmd_build(const Inputs& in) {
    engine::MatrixSpec spec = in.spec();
    print_header(in, spec, engine::build_matrix(spec));
    return 0;
}

int cmd_det(const Inputs& in, const std::string& method, const engine::Limits& limits, bool check) {
    engine::MatrixSpec spec = in.spec();
    RatMatrix m = engine::build_matrix(spec);
    auto result = engine::det_closed_form(spec, engine::parse_det_method(method), limits);
    print_header(in, spec, m);
    std::cout << "method: " << engine::det_method_name(result.method) << "\n";
    print_set(std::cout, "basis", result.basis);
    std::cout << "det: " << to_string(result.value) << "\n";
    if (check) {
        Rat reference = oracle::det(m);
        std::cout << "oracle: " << to_string(reference) << "\n";
        bool agree = reference == result.value;
        std::cout << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
        if (!agree) return 1;
    }
    return 0;
}

int cmd_inv(const Inputs& in, const std::string& method, const engine::Limits& limits, bool check) {
    engine::MatrixSpec spec = in.spec();
    RatMatrix m = engine::build_matrix(spec);
    auto result = engine::inverse_closed_form(spec, engine::parse_inv_method(method), limits);
    print_header(in, spec, m);
    std::cout << "method: " << engine::inv_method_name(result.method) << "\n";
    print_set(std::cout, "basis", result.basis);
    std::cout << "inverse:\n" << result.inverse.to_text();
    if (check) {
        RatMatrix reference = oracle::inverse(m);
        std::cout << "oracle:\n" << reference.to_text();
        bool agree = reference == result.inverse &&
                     oracle::identity_check(oracle::matmul(result.inverse, m));
        std::cout << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
        if (!agree) return 1;
    }
    return 0;
}

int cmd_verify(std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw ParseError("--trials must be at least 1");
    verify::Report report = verify::run(verify::Options{trials, seed});
    std::cout << report.text;
    return report.all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Worked examples on integer chains: MAX (join) and MIN (meet) matrices with
// f(k) = k + t. Each run evaluates the textbook closed form, the engine and
// the oracle, and reports whether all three agree.

struct ChainCase {
    std::vector<Int> values;  // strictly increasing
    Rat t;
    std::size_t n() const { return values.size(); }
    Rat fx(std::size_t i) const { return Rat(values[i]) + t; }
};

Rat example_det_max(const ChainCase& c) {
    Rat v(1);
    for (std::size_t i = 0; i + 1 < c.n(); ++i) v *= c.fx(i) - c.fx(i + 1);
    return v * c.fx(c.n() - 1);
}

Rat example_det_consecutive_max(const ChainCase& c) {
    Rat v = c.fx(c.n() - 1);
    return (c.n() % 2 == 0) ? Rat(-v) : v;
}

Rat example_det_min(const ChainCase& c) {
    Rat v = c.fx(0);
    for (std::size_t i = 0; i + 1 < c.n(); ++i) v *= c.fx(i + 1) - c.fx(i);
    return v;
}

// On a consecutive chain every MIN gap factor f(x_{v+1}) - f(x_v) is 1, so
// the determinant collapses to f(x_1) alone.
Rat example_det_consecutive_min(const ChainCase& c) { return c.fx(0); }

RatMatrix example_inverse_max(const ChainCase& c) {
    const std::size_t n = c.n();
    RatMatrix b(n, n);
    if (n == 1) {
        b.at(0, 0) = Rat(1) / c.fx(0);
        return b;
    }
    auto gap = [&](std::size_t i) -> Rat { return c.fx(i) - c.fx(i + 1); };  // negative on a rising chain
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0)
            b.at(i, i) = Rat(1) / gap(0);
        else if (i + 1 < n)
            b.at(i, i) = Rat(1) / gap(i - 1) + Rat(1) / gap(i);
        else
            b.at(i, i) = Rat(1) / gap(n - 2) + Rat(1) / c.fx(n - 1);
        if (i + 1 < n) {
            Rat off = Rat(1) / (c.fx(i + 1) - c.fx(i));  // 1/|x_i - x_{i+1}|
            b.at(i, i + 1) = off;
            b.at(i + 1, i) = off;
        }
    }
    return b;
}

RatMatrix example_inverse_consecutive_max(const ChainCase& c) {
    const std::size_t n = c.n();
    RatMatrix b(n, n);
    if (n == 1) {
        b.at(0, 0) = Rat(1) / c.fx(0);
        return b;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0)
            b.at(i, i) = -1;
        else if (i + 1 < n)
            b.at(i, i) = -2;
        else
            b.at(i, i) = Rat(-1) + Rat(1) / c.fx(n - 1);
        if (i + 1 < n) {
            b.at(i, i + 1) = 1;
            b.at(i + 1, i) = 1;
        }
    }
    return b;
}

RatMatrix example_inverse_min(const ChainCase& c) {
    const std::size_t n = c.n();
    RatMatrix b(n, n);
    if (n == 1) {
        b.at(0, 0) = Rat(1) / c.fx(0);
        return b;
    }
    auto gap = [&](std::size_t i) -> Rat { return c.fx(i + 1) - c.fx(i); };
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0)
            b.at(i, i) = c.fx(1) / (gap(0) * c.fx(0));
        else if (i + 1 < n)
            b.at(i, i) = (c.fx(i - 1) / gap(i - 1) + c.fx(i + 1) / gap(i)) / c.fx(i);
        else
            b.at(i, i) = (c.fx(n - 2) / gap(n - 2) + 1) / c.fx(n - 1);
        if (i + 1 < n) {
            Rat off = Rat(-1) / gap(i);
            b.at(i, i + 1) = off;
            b.at(i + 1, i) = off;
        }
    }
    return b;
}

RatMatrix example_inverse_consecutive_min(const ChainCase& c) {
    const std::size_t n = c.n();
    RatMatrix b(n, n);
    if (n == 1) {
        b.at(0, 0) = Rat(1) / c.fx(0);
        return b;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0)
            b.at(i, i) = (c.fx(0) + 1) / c.fx(0);
        else if (i + 1 < n)
            b.at(i, i) = 2;
        else
            b.at(i, i) = 1;
        if (i + 1 < n) {
            b.at(i, i + 1) = -1;
            b.at(i + 1, i) = -1;
        }
    }
    return b;
}

int cmd_example(int id, const std::string& chain, long start, long count, const Rat& t) {
    ChainCase c;
    c.t = t;
    if (!chain.empty()) {
        c.values = parse_int_list(chain);
        std::sort(c.values.begin(), c.values.end());
        for (std::size_t i = 1; i < c.values.size(); ++i)
            if (c.values[i] == c.values[i - 1]) throw ParseError("chain values must be distinct");
    } else {
        if (count < 1) throw ParseError("example needs --chain or --start/--n");
        for (long i = 0; i < count; ++i) c.values.push_back(Int(start + i));
    }

    const bool consecutive_required = id % 2 == 0;
    if (consecutive_required)
        for (std::size_t i = 1; i < c.values.size(); ++i)
            if (c.values[i] != c.values[i - 1] + 1)
                throw HypothesisError("this example needs a consecutive chain x, x+1, ..., x+n-1");

    const bool meet_side = id >= 5;
    const bool inverse = id == 3 || id == 4 || id == 7 || id == 8;
    if (inverse || meet_side) {
        // MIN matrices and all inverses need f nonzero on the chain; the MAX
        // inverse needs f nonzero only at the top.
        for (std::size_t i = 0; i < c.n(); ++i) {
            bool needed = meet_side || i + 1 == c.n();
            if (needed && c.fx(i) == 0)
                throw HypothesisError("t = -" + to_string(c.values[i]) + " violates the example hypothesis");
        }
    }

    static const char* titles[] = {
        "",
        "MAX determinant, arbitrary chain",
        "MAX determinant, consecutive chain",
        "MAX inverse, arbitrary chain",
        "MAX inverse, consecutive chain",
        "MIN determinant, arbitrary chain",
        "MIN determinant, consecutive chain",
        "MIN inverse, arbitrary chain",
        "MIN inverse, consecutive chain",
    };

    FinitePoset host = chain_poset(c.values);
    OrderedSubset s = OrderedSubset::from_labels(host, host.carrier());
    PosetFunction f = PosetFunction::linear_shift(host, c.t);
    engine::MatrixSpec spec(meet_side ? engine::MatrixKind::meet : engine::MatrixKind::join, s, s, f);
    RatMatrix m = engine::build_matrix(spec);

    std::cout << "example " << id << ": " << titles[id] << "\n";
    print_set(std::cout, "S", s);
    std::cout << "t: " << to_string(c.t) << "\n";
    std::cout << "matrix:\n" << m.to_text();

    bool agree = true;
    if (!inverse) {
        Rat formula;
        switch (id) {
            case 1: formula = example_det_max(c); break;
            case 2: formula = example_det_consecutive_max(c); break;
            case 5: formula = example_det_min(c); break;
            default: formula = example_det_consecutive_min(c); break;
        }
        auto result = engine::det_closed_form(spec);
        Rat reference = oracle::det(m);
        std::cout << "closed form: " << to_string(formula) << "\n";
        std::cout << "engine (" << engine::det_method_name(result.method)
                  << "): " << to_string(result.value) << "\n";
        std::cout << "oracle: " << to_string(reference) << "\n";
        agree = formula == result.value && formula == reference;
    } else {
        RatMatrix formula;
        switch (id) {
            case 3: formula = example_inverse_max(c); break;
            case 4: formula = example_inverse_consecutive_max(c); break;
            case 7: formula = example_inverse_min(c); break;
            default: formula = example_inverse_consecutive_min(c); break;
        }
        auto result = engine::inverse_closed_form(spec);
        RatMatrix reference = oracle::inverse(m);
        std::cout << "closed form:\n" << formula.to_text();
        std::cout << "engine (" << engine::inv_method_name(result.method) << "):\n"
                  << result.inverse.to_text();
        std::cout << "oracle:\n" << reference.to_text();
        agree = formula == result.inverse && formula == reference;
    }
    std::cout << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact meet/join matrix toolkit"};
    app.require_subcommand(1);

    Inputs in;
    std::string method = "auto";
    engine::Limits limits;
    bool check = false;
    std::uint64_t trials = 100, seed = 1;
    int example_id = 0;
    std::string example_chain;
    long example_start = 1, example_count = 0;
    std::string t_str = "0";

    CLI::App* build = app.add_subcommand("build", "construct and print the matrix");
    in.add_options(build);

    CLI::App* det = app.add_subcommand("det", "closed-form determinant");
    in.add_options(det);
    det->add_option("--method", method, "auto | cauchy-binet | join-closed | upper-closed");
    det->add_option("--cap", limits.cap, "subset enumeration cap");
    det->add_flag("--force", limits.force, "ignore the enumeration cap");
    det->add_flag("--check", check, "also run the exact oracle and compare");

    CLI::App* inv = app.add_subcommand("inv", "closed-form inverse");
    in.add_options(inv);
    inv->add_option("--method", method, "auto | cofactor-cb | join-closed | upper-closed");
    inv->add_option("--cap", limits.cap, "subset enumeration cap");
    inv->add_flag("--force", limits.force, "ignore the enumeration cap");
    inv->add_flag("--check", check, "also run the exact oracle and compare");

    CLI::App* verify_cmd = app.add_subcommand("verify", "randomized verification campaign");
    verify_cmd->add_option("--trials", trials, "number of random trials");
    verify_cmd->add_option("--seed", seed, "campaign seed (fully determines the run)");

    CLI::App* example = app.add_subcommand("example", "reproduce a worked MAX/MIN example (1-8)");
    example->add_option("id", example_id, "example number 1..8")->required()->check(CLI::Range(1, 8));
    example->add_option("--chain", example_chain, "chain values, e.g. 2,5,9");
    example->add_option("--start", example_start, "first value of a consecutive chain");
    example->add_option("--n", example_count, "length of a consecutive chain");
    example->add_option("--t", t_str, "shift t in f(k) = k + t (rational)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (build->parsed()) {
            in.materialize();
            return cmd_build(in);
        }
        if (det->parsed()) {
            in.materialize();
            return cmd_det(in, method, limits, check);
        }
        if (inv->parsed()) {
            in.materialize();
            return cmd_inv(in, method, limits, check);
        }
        if (verify_cmd->parsed()) return cmd_verify(trials, seed);
        if (example->parsed())
            return cmd_example(example_id, example_chain, example_start, example_count,
                               parse_rational(t_str));
    } catch (const latmat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
