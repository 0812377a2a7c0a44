// excspec: command-line front end for the excisive library.
//
// Exit codes: 0 success, 1 a verification failed, 2 budget or usage error.

#include "excisive/balmer.hpp"
#include "excisive/burnside.hpp"
#include "excisive/classify.hpp"
#include "excisive/combinat.hpp"
#include "excisive/errors.hpp"
#include "excisive/hzspec.hpp"
#include "excisive/render.hpp"
#include "excisive/zariski.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace exc;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct MuArgs {
    int i = 0, j = 0, k = 0;
    std::string method = "incl-excl";
    bool all = false;
};

int run_mu(const MuArgs& a)
{
    if (a.all) {
        const BigInt brute = mu_brute(a.i, a.j, a.k);
        const BigInt ie = mu_incl_excl(a.i, a.j, a.k);
        const BigInt st = mu_stirling(a.i, a.j, a.k);
        std::cout << "brute     " << brute << "\n"
                  << "incl-excl " << ie << "\n"
                  << "stirling  " << st << "\n";
        const bool agree = brute == ie && ie == st;
        std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
        return agree ? kOk : kVerifyFailed;
    }
    BigInt v;
    if (a.method == "brute")
        v = mu_brute(a.i, a.j, a.k);
    else if (a.method == "stirling")
        v = mu_stirling(a.i, a.j, a.k);
    else
        v = mu_incl_excl(a.i, a.j, a.k);
    std::cout << v << "\n";
    return kOk;
}

struct RingArgs {
    int d = 0;
    bool table = false, check = false, cokernel = false, json = false;
};

int run_ring(const RingArgs& a)
{
    const BurnsidePresentation pres(a.d);
    int status = kOk;
    const bool any = a.table || a.check || a.cokernel;

    if (a.table || !any) {
        if (a.json) {
            nlohmann::ordered_json j;
            j["d"] = a.d;
            j["products"] = nlohmann::ordered_json::array();
            for (int i = 1; i <= a.d; ++i)
                for (int k = i; k <= a.d; ++k) {
                    nlohmann::ordered_json row;
                    row["i"] = i;
                    row["j"] = k;
                    row["coeffs"] = nlohmann::ordered_json::array();
                    for (int l = 1; l <= a.d; ++l)
                        row["coeffs"].push_back(pres.mu(i, k, l).get_str());
                    j["products"].push_back(row);
                }
            std::cout << j.dump(2) << "\n";
        } else {
            for (int i = 1; i <= a.d; ++i)
                for (int k = i; k <= a.d; ++k) {
                    const RingElement prod =
                        pres.multiply(RingElement::basis(a.d, i), RingElement::basis(a.d, k));
                    std::cout << "x" << i << "*x" << k << " = " << prod.str() << "\n";
                }
        }
    }
    if (a.check) {
        const RingAxiomReport r = ring_axioms(a.d);
        auto line = [](const char* name, bool ok) {
            std::cout << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
        };
        line("associative", r.associative);
        line("commutative", r.commutative);
        line("unital", r.unital);
        std::ostringstream seed;
        seed << "ghost homomorphism (seed 0x" << std::hex << kDefaultSeed << ")";
        line(seed.str().c_str(), r.ghost_hom);
        if (!r.ok())
            status = kVerifyFailed;
    }
    if (a.cokernel) {
        std::cout << "invariant factors:";
        for (const auto& v : cokernel_invariants(a.d))
            std::cout << " " << v;
        std::cout << "\n";
        const bool ok = cokernel_matches_factorials(a.d);
        std::cout << "coker = prod Z/i! (i <= " << a.d << "): " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok)
            status = kVerifyFailed;
    }
    return status;
}

struct SpecArgs {
    std::string variant;
    int d = 3;
    std::vector<std::uint64_t> primes{2};
    std::uint64_t hmax = 2;
    bool no_inf = false;
    bool dot = false, json = false, text = false, csv = false;
};

int run_spec(const SpecArgs& a)
{
    const int formats = a.dot + a.json + a.text + a.csv;
    if (formats > 1) {
        std::cerr << "choose at most one of --dot, --json, --text, --csv\n";
        return kUsage;
    }
    Format fmt = Format::Text;
    if (a.dot)
        fmt = Format::Dot;
    else if (a.json)
        fmt = Format::Json;
    else if (a.csv)
        fmt = Format::Csv;

    Poset p;
    if (a.variant == "zariski") {
        p = z_poset(a.d, a.primes);
    } else if (a.variant == "balmer") {
        p = SpectrumTruncation(a.d, a.primes, a.hmax, !a.no_inf).poset();
    } else if (a.variant == "hz") {
        p = hz_poset(a.d, a.primes);
    } else {
        if (a.primes.size() != 1) {
            std::cerr << "hfp takes exactly one prime\n";
            return kUsage;
        }
        p = hfp_poset(a.d, a.primes.front());
    }
    std::cout << render(p, fmt);
    return kOk;
}

struct DeltaArgs {
    std::uint64_t p = 2, k = 1, l = 1;
    bool brute = false, chain = false;
};

int run_delta(const DeltaArgs& a)
{
    require(is_prime(a.p), "p must be prime");
    require(a.k >= a.l && a.l >= 1, "delta needs k >= l >= 1");
    const NatInf v = a.brute ? delta_p_brute(a.p, a.k, a.l) : delta_p(a.p, a.k, a.l);
    std::cout << v << "\n";
    if (a.chain) {
        const auto chain = shortest_partition_chain(a.p, a.k, a.l);
        std::cout << "chain:";
        if (chain.empty())
            std::cout << " none";
        for (auto c : chain)
            std::cout << " " << c;
        std::cout << "\n";
    }
    return kOk;
}

struct SmithArgs {
    int d = 1;
    std::uint64_t p = 2;
    int k = 1, l = 1;
    std::string n = "0", h = "0";
};

int run_smith(const SmithArgs& a)
{
    const SmithReport r =
        smith_report(a.d, a.p, a.k, a.l, NatInf::parse(a.n), NatInf::parse(a.h));
    std::cout << (r.holds ? "HOLDS" : "FAILS") << "\n" << r.witness << "\n";
    return kOk;
}

struct IdealsArgs {
    int d = 1;
    std::uint64_t p = 2, hmax = 1;
    bool count = false, list = false, json = false, csv = false;
};

int run_ideals(const IdealsArgs& a)
{
    if (a.json && a.csv) {
        std::cerr << "choose at most one of --json, --csv\n";
        return kUsage;
    }
    const bool list = a.list || (a.json && !a.count);
    const Enumeration e = enumerate_p_admissible(a.d, a.p, a.hmax, list);
    if (a.json) {
        std::cout << enumeration_to_json(a.d, a.p, a.hmax, e);
    } else if (a.csv) {
        std::cout << enumeration_to_csv(a.d, a.p, a.hmax, e);
    } else {
        if (list)
            for (const auto& f : e.functions)
                std::cout << to_string(f) << "\n";
        if (a.count || !list)
            std::cout << e.count << "\n";
    }
    return kOk;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& s)
{
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw PreconditionError("bad prime list '" + s + "'");
        out.push_back(std::stoull(tok));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariants of d-excisive functors: Burnside ring, spectra, tt-ideals"};
    app.require_subcommand(1);

    MuArgs mu;
    auto* mu_cmd = app.add_subcommand("mu", "number of good subsets of [i]x[j] of size k");
    mu_cmd->add_option("i", mu.i)->required()->check(CLI::PositiveNumber);
    mu_cmd->add_option("j", mu.j)->required()->check(CLI::PositiveNumber);
    mu_cmd->add_option("k", mu.k)->required()->check(CLI::PositiveNumber);
    mu_cmd->add_option("--method", mu.method, "brute, incl-excl or stirling")
        ->check(CLI::IsMember({"brute", "incl-excl", "stirling"}));
    mu_cmd->add_flag("--all", mu.all, "run all three methods and compare");

    RingArgs ring;
    auto* ring_cmd = app.add_subcommand("ring", "the ring A(d)");
    ring_cmd->add_option("d", ring.d)->required()->check(CLI::PositiveNumber);
    ring_cmd->add_flag("--table", ring.table, "multiplication table of basis elements");
    ring_cmd->add_flag("--check", ring.check, "verify the ring axioms and the ghost map");
    ring_cmd->add_flag("--cokernel", ring.cokernel, "invariant factors of the ghost map");
    ring_cmd->add_flag("--json", ring.json, "table as JSON");

    SpecArgs spec;
    std::string spec_primes = "2";
    auto* spec_cmd = app.add_subcommand("spec", "spectrum as a poset");
    spec_cmd->add_option("variant", spec.variant, "zariski, balmer, hz or hfp")
        ->required()
        ->check(CLI::IsMember({"zariski", "balmer", "hz", "hfp"}));
    spec_cmd->add_option("-d", spec.d, "degree")->check(CLI::PositiveNumber);
    spec_cmd->add_option("-p", spec_primes, "comma-separated primes");
    spec_cmd->add_option("-H", spec.hmax, "largest finite height")->check(CLI::PositiveNumber);
    spec_cmd->add_flag("--no-inf", spec.no_inf, "omit infinite-height points");
    spec_cmd->add_flag("--dot", spec.dot);
    spec_cmd->add_flag("--json", spec.json);
    spec_cmd->add_flag("--text", spec.text);
    spec_cmd->add_flag("--csv", spec.csv);

    DeltaArgs delta;
    auto* delta_cmd = app.add_subcommand("delta", "geometric blueshift delta_p(k,l)");
    delta_cmd->add_option("p", delta.p)->required();
    delta_cmd->add_option("k", delta.k)->required();
    delta_cmd->add_option("l", delta.l)->required();
    delta_cmd->add_flag("--brute", delta.brute, "breadth-first search instead of the closed form");
    delta_cmd->add_flag("--chain", delta.chain, "print a shortest partition chain");

    SmithArgs smith;
    auto* smith_cmd = app.add_subcommand("smith", "Smith/Floyd statement at (k,n) -> (l,h)");
    smith_cmd->add_option("d", smith.d)->required()->check(CLI::PositiveNumber);
    smith_cmd->add_option("p", smith.p)->required();
    smith_cmd->add_option("k", smith.k)->required();
    smith_cmd->add_option("l", smith.l)->required();
    smith_cmd->add_option("source_height", smith.n, "n: a height index, or inf")->required();
    smith_cmd->add_option("target_height", smith.h, "h: a height index, or inf")->required();

    IdealsArgs ideals;
    auto* ideals_cmd = app.add_subcommand("ideals", "p-admissible functions with values <= Hmax or inf");
    ideals_cmd->add_option("d", ideals.d)->required()->check(CLI::PositiveNumber);
    ideals_cmd->add_option("p", ideals.p)->required();
    ideals_cmd->add_option("Hmax", ideals.hmax)->required();
    ideals_cmd->add_flag("--count", ideals.count);
    ideals_cmd->add_flag("--list", ideals.list);
    ideals_cmd->add_flag("--json", ideals.json);
    ideals_cmd->add_flag("--csv", ideals.csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*mu_cmd)
            return run_mu(mu);
        if (*ring_cmd)
            return run_ring(ring);
        if (*spec_cmd) {
            spec.primes = parse_prime_list(spec_primes);
            return run_spec(spec);
        }
        if (*delta_cmd)
            return run_delta(delta);
        if (*smith_cmd)
            return run_smith(smith);
        if (*ideals_cmd)
            return run_ideals(ideals);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
