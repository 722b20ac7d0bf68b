// Acceptance suite: one PASS/FAIL line per primary criterion, evaluated on
// the default configuration (m = 3, N = 5000, mu = 105, 31 shuffles).
//
// Usage: acceptance [scratch-dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "archtrunc/experiment.hpp"
#include "archtrunc/selftest.hpp"
#include "archtrunc/stats.hpp"

using namespace archtrunc;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(char const* pattern, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

struct Verdict {
    std::string name;
    bool pass{};
    std::string detail;
};

class Grid {
public:
    explicit Grid(std::vector<ResultRecord> const& records)
    {
        for (auto const& r : records) {
            cells_[{r.front, r.policy, r.schedule}].push_back(&r);
        }
        for (auto& [key, v] : cells_) {
            std::sort(v.begin(), v.end(), [](auto* a, auto* b) { return a->shuffle < b->shuffle; });
        }
    }

    [[nodiscard]] std::vector<double> igds(FrontKind f, PolicyId p, Schedule s) const
    {
        std::vector<double> out;
        for (auto const* r : cell(f, p, s)) {
            out.push_back(r->igd);
        }
        return out;
    }

    [[nodiscard]] double mean(FrontKind f, PolicyId p, Schedule s) const { return sample_mean(igds(f, p, s)); }
    [[nodiscard]] double std_dev(FrontKind f, PolicyId p, Schedule s) const { return sample_std(igds(f, p, s)); }

    [[nodiscard]] double p_value(FrontKind f, PolicyId p, Schedule a, Schedule b) const
    {
        return wilcoxon_rank_sum(igds(f, p, a), igds(f, p, b));
    }

    [[nodiscard]] std::vector<ResultRecord const*> const& cell(FrontKind f, PolicyId p, Schedule s) const
    {
        static std::vector<ResultRecord const*> const empty;
        auto it = cells_.find({f, p, s});
        return it == cells_.end() ? empty : it->second;
    }

private:
    std::map<std::tuple<FrontKind, PolicyId, Schedule>, std::vector<ResultRecord const*>> cells_;
};

std::string letters_of(std::vector<SummaryCell> const& summary, FrontKind f, PolicyId p, Schedule s)
{
    for (auto const& c : summary) {
        if (c.front == f && c.policy == p && c.schedule == s) {
            return c.letters;
        }
    }
    return "?";
}

bool within(double value, double target, double rel)
{
    return std::abs(value - target) <= rel * target;
}

constexpr auto S = FrontKind::Simplex;
constexpr auto I = FrontKind::InvertedSimplex;
constexpr auto Imm = Schedule::Immediate;
constexpr auto Bat = Schedule::Batch;
constexpr auto Unb = Schedule::Unbounded;

Verdict moead_invariance(Grid const& g)
{
    bool same_archives = true;
    for (auto f : {S, I}) {
        for (std::size_t k = 0; k < 31; ++k) {
            std::set<std::vector<SolutionId>> distinct;
            for (auto s : kAllSchedules) {
                auto const& cell = g.cell(f, PolicyId::MoeadPbi, s);
                if (k >= cell.size()) {
                    same_archives = false;
                    continue;
                }
                std::vector<SolutionId> ids;
                for (auto const& m : cell[k]->final_archive) {
                    ids.push_back(m.id);
                }
                std::sort(ids.begin(), ids.end());
                distinct.insert(ids);
            }
            same_archives = same_archives && distinct.size() == 1;
        }
    }
    bool zero_std = true;
    for (auto f : {S, I}) {
        for (auto s : kAllSchedules) {
            zero_std = zero_std && g.std_dev(f, PolicyId::MoeadPbi, s) == 0.0;
        }
    }
    double const ms = g.mean(S, PolicyId::MoeadPbi, Imm);
    double const mi = g.mean(I, PolicyId::MoeadPbi, Imm);
    bool const pass = same_archives && zero_std && within(ms, 3.718e-2, 0.05) && within(mi, 6.214e-2, 0.05);
    return {"moead-invariance", pass,
            fmt("identical archives %s, std zero %s, simplex %.4e (3.718e-02 +-5%%), inverted %.4e (6.214e-02 +-5%%)",
                same_archives ? "yes" : "no", zero_std ? "yes" : "no", ms, mi)};
}

Verdict nsga2_collapse(Grid const& g, std::vector<SummaryCell> const& summary)
{
    auto const p = PolicyId::Nsga2OneOff;
    double const u = g.mean(S, p, Unb);
    double const i = g.mean(S, p, Imm);
    auto const la = letters_of(summary, S, p, Imm);
    auto const lb = letters_of(summary, S, p, Bat);
    auto const lc = letters_of(summary, S, p, Unb);
    bool const pattern = la == "a" && lb == "b" && lc == "c";
    bool const pass = within(u, 2.229e-1, 0.20) && u >= 3.0 * i && pattern;
    return {"nsga2-oneoff-collapse", pass,
            fmt("unbounded %.4e (2.229e-01 +-20%%), ratio to immediate %.2f (>= 3), letters %s/%s/%s (a/b/c)", u, u / i, la.c_str(),
                lb.c_str(), lc.c_str())};
}

Verdict nsga2_iterative(Grid const& g)
{
    auto const p = PolicyId::Nsga2Iterative;
    double const u = g.mean(S, p, Unb);
    double const i = g.mean(S, p, Imm);
    double const ui = g.mean(I, p, Unb);
    double const ii = g.mean(I, p, Imm);
    bool const pass = within(u, i, 0.10) && within(ui, ii, 0.10);
    return {"nsga2-iterative-fix", pass,
            fmt("simplex unbounded %.4e vs immediate %.4e (%+.1f%%), inverted %.4e vs %.4e (%+.1f%%), limit 10%%", u, i,
                100 * (u - i) / i, ui, ii, 100 * (ui - ii) / ii)};
}

Verdict sms_ordering(Grid const& g)
{
    auto const p = PolicyId::SmsRemoval;
    bool order = true;
    bool significant = true;
    std::string parts;
    for (auto f : {S, I}) {
        double const a = g.mean(f, p, Imm);
        double const b = g.mean(f, p, Bat);
        double const c = g.mean(f, p, Unb);
        double const pv = g.p_value(f, p, Imm, Unb);
        order = order && a < b && b <= c;
        significant = significant && pv < 0.05;
        parts += fmt("%s %.4e/%.4e/%.4e p=%.1e; ", std::string(to_string(f)).c_str(), a, b, c, pv);
    }
    bool const magnitudes = within(g.mean(S, p, Imm), 3.798e-2, 0.05) && within(g.mean(S, p, Bat), 3.895e-2, 0.05) &&
                            within(g.mean(S, p, Unb), 3.911e-2, 0.05);
    return {"sms-nesting-order", order && significant && magnitudes,
            parts + fmt("order %s, significant %s, simplex within 5%% of 3.798/3.895/3.911e-02 %s", order ? "yes" : "no",
                        significant ? "yes" : "no", magnitudes ? "yes" : "no")};
}

Verdict removal_vs_inclusion(Grid const& g)
{
    double const ru = g.mean(S, PolicyId::SmsRemoval, Unb);
    double const iu = g.mean(S, PolicyId::HvInclusion, Unb);
    double const ri = g.mean(S, PolicyId::SmsRemoval, Imm);
    double const ii = g.mean(S, PolicyId::HvInclusion, Imm);
    bool const pass = iu < ru && ri < ii;
    return {"removal-vs-inclusion", pass,
            fmt("unbounded inclusion %.4e < removal %.4e: %s; immediate removal %.4e < inclusion %.4e: %s", iu, ru, iu < ru ? "yes" : "no",
                ri, ii, ri < ii ? "yes" : "no")};
}

Verdict ibea_magnitudes(Grid const& g)
{
    auto const p = PolicyId::Ibea;
    double const a = g.mean(S, p, Imm);
    double const b = g.mean(S, p, Bat);
    double const c = g.mean(S, p, Unb);
    double const pa = g.p_value(S, p, Imm, Unb);
    double const pb = g.p_value(S, p, Bat, Unb);
    bool const magnitudes = within(a, 4.15e-2, 0.10) && within(b, 4.15e-2, 0.10) && within(c, 4.32e-2, 0.10);
    bool const worse = c > a && c > b && pa < 0.05 && pb < 0.05;
    return {"ibea-magnitudes", magnitudes && worse,
            fmt("simplex %.4e/%.4e/%.4e (4.15/4.15/4.32e-02 +-10%%), unbounded worse with p=%.1e, %.1e", a, b, c, pa, pb)};
}

Verdict nsga3(Grid const& g, std::vector<SummaryCell> const& summary)
{
    auto const p = PolicyId::Nsga3;
    bool simplex = true;
    std::string parts;
    for (auto s : kAllSchedules) {
        double const m = g.mean(S, p, s);
        simplex = simplex && within(m, 3.732e-2, 0.05);
        parts += fmt("%.4e ", m);
    }
    double const ii = g.mean(I, p, Imm);
    double const iu = g.mean(I, p, Unb);
    double const pv = g.p_value(I, p, Imm, Unb);
    bool const inverted = ii < iu && pv < 0.05;
    return {"nsga3", simplex && inverted,
            fmt("simplex %s(3.732e-02 +-5%%); inverted immediate %.4e < unbounded %.4e, p=%.1e, letters %s vs %s", parts.c_str(), ii, iu,
                pv, letters_of(summary, I, p, Imm).c_str(), letters_of(summary, I, p, Unb).c_str())};
}

/// raw_results.csv without the wall-clock column.
std::string deterministic_part(fs::path const& file)
{
    std::ifstream in(file);
    std::string line;
    std::string out;
    while (std::getline(in, line)) {
        out += line.substr(0, line.rfind(',')) + '\n';
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    fs::path const scratch = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "archtrunc_acceptance";
    fs::remove_all(scratch);
    fs::create_directories(scratch);
    std::vector<Verdict> verdicts;

    // oracle suite
    auto t0 = Clock::now();
    auto const report = run_selftest();
    double const selftest_s = seconds_since(t0);
    std::string failures;
    for (auto const& f : report.failures) {
        failures += "; " + f;
    }
    verdicts.push_back({"oracle-selftest", report.ok(),
                        fmt("%zu checks in %zu groups, %zu failed, %.1f s", report.checks, report.groups.size(), report.failures.size(),
                            selftest_s) +
                            failures});

    // budgets measured on this machine
    ExperimentConfig smoke;
    smoke.n_solutions = 300;
    smoke.mu = 21;
    smoke.n_shuffles = 5;
    smoke.output_dir = scratch / "smoke";
    t0 = Clock::now();
    auto const smoke_result = run_experiment(smoke);
    double const smoke_s = seconds_since(t0);

    ExperimentConfig single;
    single.fronts = {FrontKind::Simplex};
    single.policies = {PolicyId::SmsRemoval};
    single.schedules = {Schedule::Unbounded};
    single.n_shuffles = 1;
    single.output_dir = scratch / "single";
    t0 = Clock::now();
    (void)run_experiment(single);
    double const single_s = seconds_since(t0);

    unsigned const cores = std::max(1u, std::thread::hardware_concurrency());
    ExperimentConfig full;
    full.workers = std::min(8u, cores);
    full.output_dir = scratch / "full_a";
    std::fprintf(stderr, "running the default grid with %zu worker(s)...\n", full.workers);
    t0 = Clock::now();
    auto const result = run_experiment(full);
    double const grid_s = seconds_since(t0);
    std::fprintf(stderr, "  %zu runs, %zu failed, %.0f s\n", result.records.size(), result.failures.size(), grid_s);

    Grid const grid(result.records);
    verdicts.insert(verdicts.begin(), {moead_invariance(grid), nsga2_collapse(grid, result.summary), nsga2_iterative(grid),
                                       sms_ordering(grid), removal_vs_inclusion(grid), ibea_magnitudes(grid), nsga3(grid, result.summary)});

    bool const budget = single_s <= 120.0 && grid_s <= 3600.0 && smoke_s <= 60.0 && smoke_result.failures.empty() &&
                        result.failures.empty();
    verdicts.push_back({"runtime-budget", budget,
                        fmt("single unbounded sms %.1f s (<= 120), full grid %.0f s with %zu worker(s) on %u core(s) (<= 3600), smoke %.1f s (<= 60)",
                            single_s, grid_s, full.workers, cores, smoke_s)});

    // second execution with a different worker count
    ExperimentConfig again = full;
    again.workers = full.workers == 1 ? 2 : 1;
    again.output_dir = scratch / "full_b";
    std::fprintf(stderr, "running the default grid again with %zu worker(s)...\n", again.workers);
    t0 = Clock::now();
    (void)run_experiment(again);
    double const again_s = seconds_since(t0);
    auto const a = deterministic_part(full.output_dir / "raw_results.csv");
    auto const b = deterministic_part(again.output_dir / "raw_results.csv");
    bool const same = !a.empty() && a == b;
    verdicts.push_back({"determinism", same,
                        fmt("raw_results.csv (excluding duration_ms) %s between %zu and %zu worker(s); second run %.0f s",
                            same ? "identical" : "differs", full.workers, again.workers, again_s)});

    int failed = 0;
    for (auto const& v : verdicts) {
        std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", v.name.c_str(), v.detail.c_str());
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(verdicts.size()) - failed, verdicts.size());
    std::fflush(stdout);

    {
        std::ifstream summary(full.output_dir / "summary.txt");
        std::printf("\n%s", std::string(std::istreambuf_iterator<char>(summary), {}).c_str());
    }
    fs::remove_all(scratch);
    return failed == 0 ? 0 : 1;
}
