#include "horoct/expectations.hpp"
#include "horoct/report.hpp"
#include "horoct/sweep.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace {

using namespace horoct;

constexpr const char* kUsage =
    "usage: horoct <command> [options]\n"
    "\n"
    "commands:\n"
    "  gen     print sequence values, octonion rows, or dual rows\n"
    "  verify  sweep catalogued identities and compare against expectations\n"
    "  eval    evaluate one closed form against its oracle at a single point\n"
    "\n"
    "parameters (gen, verify, eval):\n"
    "  --preset NAME            fibonacci | lucas | pell\n"
    "  --a R --b R --p R --q R  explicit rationals: \"3\", \"-3\", \"3/2\"\n"
    "\n"
    "gen:\n"
    "  --to N                   rows 0..N (scalar output is one comma-joined line)\n"
    "  --at N                   single row N\n"
    "  --octonion | --dual      row contents; default scalar w_n\n"
    "\n"
    "verify:\n"
    "  --identity ID            repeatable; --all for the whole catalog\n"
    "  --n A..B | --n N         index range, default 1..16\n"
    "  --format F               json | csv | markdown-summary, default json\n"
    "  --out PATH               report destination, default stdout\n"
    "  --expectations PATH      default data/expectations.json\n"
    "  --update-expectations    rewrite the expectations file from this run\n"
    "  --jobs N                 worker threads, default 1\n"
    "  --config PATH            json sweep config (points, n_min, n_max, ids, jobs)\n"
    "  exit codes: 0 expectations met (or not comparable), 1 drift, 2 usage\n"
    "\n"
    "eval:\n"
    "  --formula F              binet-w | binet-dog | norm-dog | sum-dog |\n"
    "                           genfunc-w | genfunc-dog\n"
    "  --n N                    evaluation index (genfunc: truncation order)\n";

unsigned parse_unsigned(std::string_view text, std::string_view flag) {
    unsigned value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw UsageError(std::string(flag) + " expects a non-negative integer");
    return value;
}

std::pair<unsigned, unsigned> parse_range(std::string_view text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        const unsigned n = parse_unsigned(text, "--n");
        return {n, n};
    }
    const unsigned lo = parse_unsigned(text.substr(0, dots), "--n");
    const unsigned hi = parse_unsigned(text.substr(dots + 2), "--n");
    if (lo > hi) throw UsageError("range bounds out of order");
    return {lo, hi};
}

struct ParamFlags {
    std::optional<std::string> preset, a, b, p, q;

    bool any_explicit() const { return a || b || p || q; }

    std::optional<HoradamParams> resolve() const {
        if (preset && any_explicit())
            throw UsageError("--preset and explicit parameters are mutually exclusive");
        if (preset) return preset_params(*preset);
        if (!any_explicit()) return std::nullopt;
        if (!(a && b && p && q)) throw UsageError("explicit parameters need all of --a --b --p --q");
        return HoradamParams{parse_rational(*a), parse_rational(*b), parse_rational(*p),
                             parse_rational(*q)};
    }

    // Tries to claim one parameter flag; true if `arg` was one of ours.
    bool consume(std::string_view arg, const std::function<const std::string&()>& value) {
        if (arg == "--preset") preset = value();
        else if (arg == "--a") a = value();
        else if (arg == "--b") b = value();
        else if (arg == "--p") p = value();
        else if (arg == "--q") q = value();
        else return false;
        return true;
    }
};

// Splits "--flag=value" so the parsers below only see space-separated pairs.
std::vector<std::string> normalize(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        const std::string_view arg = argv[i];
        const std::size_t eq = arg.find('=');
        if (arg.rfind("--", 0) == 0 && eq != std::string_view::npos) {
            args.emplace_back(arg.substr(0, eq));
            args.emplace_back(arg.substr(eq + 1));
        } else {
            args.emplace_back(arg);
        }
    }
    return args;
}

class ArgCursor {
public:
    explicit ArgCursor(const std::vector<std::string>& args) : args_(args) {}

    bool next(std::string_view& arg) {
        if (i_ >= args_.size()) return false;
        arg = args_[i_++];
        return true;
    }

    const std::string& value(std::string_view flag) {
        if (i_ >= args_.size()) throw UsageError(std::string(flag) + " needs a value");
        return args_[i_++];
    }

private:
    const std::vector<std::string>& args_;
    std::size_t i_ = 0;
};

int run_gen(const std::vector<std::string>& args) {
    ParamFlags pf;
    std::optional<unsigned> to, at;
    bool octonion = false, dual = false;

    ArgCursor cur(args);
    std::string_view arg;
    while (cur.next(arg)) {
        auto value = [&]() -> const std::string& { return cur.value(arg); };
        if (pf.consume(arg, value)) continue;
        if (arg == "--to") to = parse_unsigned(value(), "--to");
        else if (arg == "--at") at = parse_unsigned(value(), "--at");
        else if (arg == "--octonion") octonion = true;
        else if (arg == "--dual") dual = true;
        else if (arg == "--help") { std::cout << kUsage; return 0; }
        else throw UsageError("unknown flag: " + std::string(arg));
    }

    const std::optional<HoradamParams> params = pf.resolve();
    if (!params) throw UsageError("gen needs --preset or explicit parameters");
    if (octonion && dual) throw UsageError("--octonion and --dual are mutually exclusive");
    if (!to && !at) throw UsageError("gen needs --to or --at");

    const unsigned lo = at ? *at : 0;
    const unsigned hi = at ? *at : *to;
    SeqWindow w(*params);

    if (!octonion && !dual) {
        if (at) {
            std::cout << to_canonical(w.at(*at)) << '\n';
            return 0;
        }
        std::string line;
        for (unsigned n = lo; n <= hi; ++n) {
            if (n > lo) line += ',';
            line += to_canonical(w.at(n));
        }
        std::cout << line << '\n';
        return 0;
    }
    for (unsigned n = lo; n <= hi; ++n) {
        if (octonion) std::cout << n << ": " << to_string(og(w, n)) << '\n';
        else std::cout << n << ": " << to_string(dog(w, n)) << '\n';
    }
    return 0;
}

BigRat rational_from_json(const nlohmann::json& j, const char* key) {
    const nlohmann::json& v = j.at(key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return BigRat(v.get<long long>());
    throw UsageError(std::string("config: ") + key + " must be a rational string or integer");
}

void apply_config_file(SweepConfig& cfg, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        const nlohmann::json j = nlohmann::json::parse(buf.str());
        if (j.contains("points")) {
            cfg.points.clear();
            for (const nlohmann::json& pj : j.at("points"))
                cfg.points.push_back({rational_from_json(pj, "a"), rational_from_json(pj, "b"),
                                      rational_from_json(pj, "p"), rational_from_json(pj, "q")});
        }
        if (j.contains("n_min")) cfg.n_min = j.at("n_min").get<unsigned>();
        if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<unsigned>();
        if (j.contains("ids")) cfg.ids = j.at("ids").get<std::vector<std::string>>();
        if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<unsigned>();
    } catch (const nlohmann::json::exception& err) {
        throw UsageError(std::string("malformed config file: ") + err.what());
    }
}

int run_verify(const std::vector<std::string>& args) {
    ParamFlags pf;
    std::vector<std::string> identities;
    bool all = false, update = false;
    std::optional<std::pair<unsigned, unsigned>> range;
    std::string format = "json";
    std::optional<std::string> out_path, config_path;
    std::string expectations_path = "data/expectations.json";
    std::optional<unsigned> jobs;

    ArgCursor cur(args);
    std::string_view arg;
    while (cur.next(arg)) {
        auto value = [&]() -> const std::string& { return cur.value(arg); };
        if (pf.consume(arg, value)) continue;
        if (arg == "--identity") identities.push_back(value());
        else if (arg == "--all") all = true;
        else if (arg == "--n") range = parse_range(value());
        else if (arg == "--format") format = value();
        else if (arg == "--out") out_path = value();
        else if (arg == "--expectations") expectations_path = value();
        else if (arg == "--update-expectations") update = true;
        else if (arg == "--jobs") jobs = parse_unsigned(value(), "--jobs");
        else if (arg == "--config") config_path = value();
        else if (arg == "--help") { std::cout << kUsage; return 0; }
        else throw UsageError("unknown flag: " + std::string(arg));
    }

    if (all && !identities.empty())
        throw UsageError("--all and --identity are mutually exclusive");
    if (!all && identities.empty() && !config_path)
        throw UsageError("verify needs --identity, --all, or --config");
    if (jobs && *jobs == 0) throw UsageError("--jobs expects a positive integer");

    const ReportFormat report_format = parse_format(format);

    SweepConfig cfg;
    if (config_path) apply_config_file(cfg, *config_path);
    if (!identities.empty()) cfg.ids = identities;
    if (all) cfg.ids.clear();
    if (range) {
        cfg.n_min = range->first;
        cfg.n_max = range->second;
    }
    if (jobs) cfg.jobs = *jobs;
    if (const std::optional<HoradamParams> point = pf.resolve()) {
        cfg.points = {*point};
    } else if (cfg.points.empty()) {
        cfg.points = default_sweep().points;
    }

    const std::vector<Verdict> verdicts = run_sweep(Registry::builtin(), cfg);
    const std::string report = render_report(verdicts, report_format);
    if (out_path) {
        std::ofstream out(*out_path, std::ios::binary | std::ios::trunc);
        if (!out || !(out << report).flush())
            throw UsageError("cannot write report: " + *out_path);
    } else {
        std::cout << report;
    }

    const Expectations fresh = summarize(cfg, verdicts);
    if (update) {
        save_expectations(expectations_path, fresh);
        std::cerr << "note: wrote expectations to " << expectations_path << '\n';
        return 0;
    }
    if (!std::filesystem::exists(expectations_path)) {
        std::cerr << "note: no expectations at " << expectations_path
                  << "; drift check skipped\n";
        return 0;
    }
    const Expectations pinned = load_expectations(expectations_path);
    if (!same_config(pinned, fresh)) {
        std::cerr << "note: expectations cover a different configuration; drift check skipped\n";
        return 0;
    }
    const std::vector<std::string> drift = diff_profiles(pinned, fresh);
    for (const std::string& line : drift) std::cerr << "drift: " << line << '\n';
    return drift.empty() ? 0 : 1;
}

template <class T>
std::string join_coeffs(const TruncSeries<T>& s, unsigned upto,
                        std::string (*render)(const T&)) {
    std::string out;
    for (std::size_t k = 0; k <= upto; ++k) {
        if (k) out += ", ";
        out += render(s[k]);
    }
    return out;
}

int run_eval(const std::vector<std::string>& args) {
    ParamFlags pf;
    std::optional<std::string> formula;
    std::optional<unsigned> n;

    ArgCursor cur(args);
    std::string_view arg;
    while (cur.next(arg)) {
        auto value = [&]() -> const std::string& { return cur.value(arg); };
        if (pf.consume(arg, value)) continue;
        if (arg == "--formula") formula = value();
        else if (arg == "--n") n = parse_unsigned(value(), "--n");
        else if (arg == "--help") { std::cout << kUsage; return 0; }
        else throw UsageError("unknown flag: " + std::string(arg));
    }

    if (!formula) throw UsageError("eval needs --formula");
    if (!n) throw UsageError("eval needs --n");
    const std::optional<HoradamParams> params = pf.resolve();
    if (!params) throw UsageError("eval needs --preset or explicit parameters");

    SeqWindow w(*params);
    std::string oracle, closed;
    if (*formula == "binet-w") {
        const ClosedForms f(*params);
        oracle = to_canonical(w.at(*n));
        closed = to_canonical(binet_w(f, *n));
    } else if (*formula == "binet-dog") {
        const ClosedForms f(*params);
        oracle = to_string(dog(w, *n));
        closed = to_string(binet_dog(f, *n));
    } else if (*formula == "norm-dog") {
        const ClosedForms f(*params);
        oracle = to_string(norm_dog_oracle(w, *n));
        closed = to_string(norm_dog_rhs(f, w, *n, NormLead::corrected));
    } else if (*formula == "sum-dog") {
        const ClosedForms f(*params);
        oracle = to_string(sum_dog_lhs(w, *n));
        closed = to_string(sum_dog_rhs(f, w, *n));
    } else if (*formula == "genfunc-w") {
        oracle = join_coeffs<BigRat>(gen_series_oracle(*params, *n), *n, +[](const BigRat& v) {
            return to_canonical(v);
        });
        closed = join_coeffs<BigRat>(gen_series_closed(*params, *n), *n, +[](const BigRat& v) {
            return to_canonical(v);
        });
    } else if (*formula == "genfunc-dog") {
        oracle = join_coeffs<DualOct>(dog_series_oracle(w, *n), *n, +[](const DualOct& v) {
            return to_string(v);
        });
        closed = join_coeffs<DualOct>(dog_series_closed(w, *n), *n, +[](const DualOct& v) {
            return to_string(v);
        });
    } else {
        throw UsageError("unknown formula: " + *formula);
    }

    std::cout << "oracle: " << oracle << '\n';
    std::cout << "closed-form: " << closed << '\n';
    std::cout << "equal: " << (oracle == closed ? "yes" : "no") << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args = normalize(argc, argv);
    if (args.empty()) {
        std::cerr << kUsage;
        return 2;
    }
    const std::string& cmd = args[0];
    if (cmd == "--help" || cmd == "-h" || cmd == "help") {
        std::cout << kUsage;
        return 0;
    }
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        if (cmd == "gen") return run_gen(rest);
        if (cmd == "verify") return run_verify(rest);
        if (cmd == "eval") return run_eval(rest);
        throw UsageError("unknown subcommand: " + cmd);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
