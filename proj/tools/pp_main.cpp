// pp: prudent-polygon series, constants, validation and random sampling.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "pp/asymptotics.hpp"
#include "pp/funceq.hpp"
#include "pp/gf.hpp"
#include "pp/oracle.hpp"
#include "pp/render.hpp"
#include "pp/sampler.hpp"

namespace {

constexpr char kTool[] = "pp";
constexpr char kVersion[] = "1.0.0";

int env_order_cap(int fallback) {
    if (const char* s = std::getenv("PP_MAX_ORDER")) {
        int v = std::atoi(s);
        if (v > fallback) return v;
    }
    return fallback;
}

struct Out {
    std::string format;  // text | csv | json
    std::string command;
    nlohmann::json meta;

    explicit Out(std::string fmt, std::string cmd)
        : format(std::move(fmt)), command(std::move(cmd)) {
        meta["tool"] = kTool;
        meta["version"] = kVersion;
        meta["command"] = command;
        meta["generator"] = pp::sampler::kGeneratorId;
    }

    void header() const {
        if (format == "json") return;
        const char* c = format == "csv" ? "#" : "#";
        std::printf("%s %s %s\n%s command: %s\n%s generator: %s\n", c, kTool,
                    kVersion, c, command.c_str(), c, pp::sampler::kGeneratorId);
    }
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------- series --

std::vector<pp::BigInt> series_ints(const pp::TruncatedSeries& s) {
    std::vector<pp::BigInt> out;
    for (const pp::Rational& r : s.constant_coeffs()) out.push_back(pp::to_integer(r));
    return out;
}

int cmd_series(const std::string& cls, int order, const Out& out) {
    std::vector<pp::BigInt> c;
    if (cls == "pp-all") {
        c = series_ints(pp::funceq::pp_all_gf(order));
    } else {
        pp::gf::GfCatalog cat(order);
        if (cls == "bargraph") c = series_ints(cat.bargraph1());
        else if (cls == "pp2") c = series_ints(cat.pp2());
        else if (cls == "pp3") c = series_ints(cat.pp3());
        else if (cls == "one-sided") c = series_ints(cat.one_sided());
        else c = series_ints(cat.r11());  // "R"
    }
    if (out.format == "json") {
        nlohmann::json j;
        j["metadata"] = out.meta;
        j["class"] = cls;
        j["order"] = order;
        nlohmann::json arr = nlohmann::json::array();
        for (const pp::BigInt& v : c) arr.push_back(v.get_str());
        j["coefficients"] = std::move(arr);
        std::printf("%s\n", j.dump(2).c_str());
    } else if (out.format == "csv") {
        out.header();
        std::printf("m,coefficient\n");
        for (size_t m = 0; m < c.size(); ++m)
            std::printf("%zu,%s\n", m, c[m].get_str().c_str());
    } else {
        out.header();
        for (const pp::BigInt& v : c) std::printf("%s\n", v.get_str().c_str());
    }
    return 0;
}

// ------------------------------------------------------------------ asym --

void print_constant(const pp::asym::Constant& k, const Out& out) {
    if (out.format == "json") {
        nlohmann::json j;
        j["metadata"] = out.meta;
        j["name"] = k.name;
        j["value"] = k.value;
        j["residual"] = k.residual;
        j["bracket"] = {k.lo, k.hi};
        std::printf("%s\n", j.dump(2).c_str());
    } else if (out.format == "csv") {
        out.header();
        std::printf("name,value,residual,lo,hi\n%s,%s,%s,%s,%s\n", k.name.c_str(),
                    fmt_double(k.value).c_str(), fmt_double(k.residual).c_str(),
                    fmt_double(k.lo).c_str(), fmt_double(k.hi).c_str());
    } else {
        out.header();
        std::printf("name     %s\nvalue    %s\nresidual %s\nbracket  [%s, %s]\n",
                    k.name.c_str(), fmt_double(k.value).c_str(),
                    fmt_double(k.residual).c_str(), fmt_double(k.lo).c_str(),
                    fmt_double(k.hi).c_str());
    }
}

int cmd_asym(const std::string& which, int n, const std::string& cls, int order,
             const Out& out) {
    if (which == "growth") {
        std::vector<pp::BigInt> c;
        {
            pp::gf::GfCatalog cat(order);
            c = series_ints(cls == "pp3" ? cat.pp3() : cat.pp2());
        }
        pp::asym::GrowthEstimate g = pp::asym::growth_estimate(c, -1.5);
        if (out.format == "json") {
            nlohmann::json j;
            j["metadata"] = out.meta;
            j["class"] = cls;
            j["coefficients"] = order + 1;
            j["rate"] = g.rate;
            j["amplitude"] = g.amplitude;
            std::printf("%s\n", j.dump(2).c_str());
        } else if (out.format == "csv") {
            out.header();
            std::printf("class,coefficients,rate,amplitude\n%s,%d,%s,%s\n",
                        cls.c_str(), order + 1, fmt_double(g.rate).c_str(),
                        fmt_double(g.amplitude).c_str());
        } else {
            out.header();
            std::printf("class        %s\ncoefficients %d\nrate         %s\namplitude    %s\n",
                        cls.c_str(), order + 1, fmt_double(g.rate).c_str(),
                        fmt_double(g.amplitude).c_str());
        }
        return 0;
    }
    pp::asym::Constant k;
    if (which == "rho") k = pp::asym::rho();
    else if (which == "A") k = pp::asym::amplitude_A();
    else if (which == "sigma") k = pp::asym::sigma();
    else k = pp::asym::sigma_n(n);
    print_constant(k, out);
    return 0;
}

// ---------------------------------------------------------------- sample --

pp::sampler::SampleClass parse_class(const std::string& s) {
    using pp::sampler::SampleClass;
    if (s == "two") return SampleClass::kTwo;
    if (s == "three") return SampleClass::kThree;
    return SampleClass::kAll;
}

int cmd_sample(const std::string& cls_name, int m, int count, uint64_t seed,
               const std::string& format, const std::string& out_dir, int jobs,
               const Out& out) {
    using pp::sampler::SampleClass;
    SampleClass cls = parse_class(cls_name);
    int cap = cls == SampleClass::kAll ? pp::sampler::kMaxHalfPerimeterAll
                                       : pp::sampler::kMaxHalfPerimeterTwoThree;
    if (m < 2 || m > cap) {
        std::fprintf(stderr, "pp sample: m must lie in [2, %d] for class %s\n", cap,
                     cls_name.c_str());
        return 2;
    }
    std::vector<pp::sampler::SampledPolygon> polys =
        pp::sampler::sample(cls, m, count, seed, jobs);

    auto piece = [&](const pp::sampler::SampledPolygon& p) -> std::string {
        if (format == "svg") {
            // no "--" inside XML comments, so echo fields, not the raw argv
            char head[192];
            std::snprintf(head, sizeof head,
                          "<!-- %s %s | class %s m %d seed %llu index %llu | %s -->\n",
                          kTool, kVersion, cls_name.c_str(), m,
                          (unsigned long long)seed, (unsigned long long)p.index,
                          pp::sampler::kGeneratorId);
            return head + pp::render::to_svg(p.cells);
        }
        if (format == "json")
            return pp::render::to_json(cls_name.c_str(), p.cells, p.half_perimeter,
                                       seed, p.index) +
                   "\n";
        return pp::render::to_ascii(p.cells);
    };
    auto ext = [&]() -> const char* {
        return format == "svg" ? "svg" : format == "json" ? "json" : "txt";
    };

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const auto& p : polys) {
            char name[160];
            std::snprintf(name, sizeof name, "pp_%s_m%d_seed%llu_%04llu.%s",
                          cls_name.c_str(), m, (unsigned long long)seed,
                          (unsigned long long)p.index, ext());
            std::ofstream f(std::filesystem::path(out_dir) / name,
                            std::ios::binary);
            f << piece(p);
            if (!f) {
                std::fprintf(stderr, "pp sample: cannot write %s\n", name);
                return 2;
            }
        }
        std::printf("wrote %zu file(s) to %s\n", polys.size(), out_dir.c_str());
        return 0;
    }

    if (format == "json") {
        nlohmann::json j;
        j["metadata"] = out.meta;
        j["metadata"]["seed"] = seed;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : polys)
            arr.push_back(nlohmann::json::parse(pp::render::to_json(
                cls_name.c_str(), p.cells, p.half_perimeter, seed, p.index)));
        j["polygons"] = std::move(arr);
        std::printf("%s\n", j.dump(2).c_str());
    } else if (format == "svg") {
        for (const auto& p : polys) std::fputs(piece(p).c_str(), stdout);
    } else {
        out.header();
        for (const auto& p : polys) {
            std::printf("# index %llu\n", (unsigned long long)p.index);
            std::fputs(pp::render::to_ascii(p.cells).c_str(), stdout);
        }
    }
    return 0;
}

// -------------------------------------------------------------- validate --

struct Checker {
    int failures = 0;
    void eq(const std::string& what, const pp::BigInt& got, const pp::BigInt& want) {
        if (got == want) {
            std::printf("ok: %s = %s\n", what.c_str(), want.get_str().c_str());
        } else {
            ++failures;
            std::printf("MISMATCH: %s: got %s, expected %s\n", what.c_str(),
                        got.get_str().c_str(), want.get_str().c_str());
        }
    }
    void flag(const std::string& what, bool ok) {
        if (ok) {
            std::printf("ok: %s\n", what.c_str());
        } else {
            ++failures;
            std::printf("MISMATCH: %s\n", what.c_str());
        }
    }
};

pp::BigInt coeff_at(const pp::TruncatedSeries& s, int m) {
    return pp::to_integer(s.coeff(m).as_constant());
}

pp::BigInt oracle_count(int m, pp::oracle::PPClass c) {
    return pp::BigInt(long(pp::oracle::enumerate(m, c).count));
}

int cmd_validate(int max_m, std::vector<std::string> classes, const Out& out) {
    out.header();
    if (max_m < 2) {
        std::printf("no polygons below half-perimeter 2; vacuous pass\n");
        return 0;
    }
    for (const std::string& c : classes) {
        int cap = c == "all" ? 10 : 14;
        if (max_m > cap) {
            std::fprintf(stderr,
                         "pp validate: class %s supports --max-m up to %d\n",
                         c.c_str(), cap);
            return 2;
        }
    }
    using pp::oracle::PPClass;
    using pp::sampler::SampleClass;
    int N = max_m;
    pp::gf::GfCatalog cat(N);
    Checker ck;
    for (const std::string& c : classes) {
        if (c == "two") {
            pp::TruncatedSeries feq = pp::funceq::solve_feqB(N)
                                          .subst_value(pp::Var::u, pp::Rational(1))
                                          .subst_value(pp::Var::w, pp::Rational(1));
            ck.flag("two: closed-form B(t,1) == functional-equation iterate",
                    cat.bargraph1() == feq);
            for (int m = 2; m <= max_m; ++m) {
                ck.eq("two: oracle count m=" + std::to_string(m),
                      oracle_count(m, PPClass::two),
                      coeff_at(cat.pp2(), m));
                ck.eq("two: tree level count m=" + std::to_string(m),
                      pp::sampler::level_count(SampleClass::kTwo, m),
                      coeff_at(cat.bargraph1(), m));
            }
        } else if (c == "three") {
            pp::TruncatedSeries feq = pp::funceq::solve_feqR(N, cat)
                                          .subst_value(pp::Var::u, pp::Rational(1))
                                          .subst_value(pp::Var::w, pp::Rational(1));
            ck.flag("three: closed-form R(t,1,1) == functional-equation iterate",
                    cat.r11() == feq);
            for (int m = 2; m <= max_m; ++m) {
                ck.eq("three: oracle count m=" + std::to_string(m),
                      oracle_count(m, PPClass::three),
                      coeff_at(cat.pp3(), m));
                ck.eq("three: tree level count m=" + std::to_string(m),
                      pp::sampler::level_count(SampleClass::kThree, m),
                      coeff_at(cat.r11(), m));
            }
        } else {
            pp::TruncatedSeries all = pp::funceq::pp_all_gf(N);
            for (int m = 2; m <= max_m; ++m) {
                pp::BigInt f = coeff_at(all, m) / 8;
                ck.eq("all: oracle count m=" + std::to_string(m),
                      oracle_count(m, PPClass::all),
                      coeff_at(all, m));
                ck.eq("all: oracle class-F count m=" + std::to_string(m),
                      oracle_count(m, PPClass::classF), f);
                ck.eq("all: tree level count m=" + std::to_string(m),
                      pp::sampler::level_count(SampleClass::kAll, m), f);
            }
        }
    }
    std::printf("%s\n", ck.failures ? "FAILED" : "all checks passed");
    return ck.failures ? 1 : 0;
}

std::string quote_echo(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prudent polygons: exact series, constants and uniform sampling"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string cls, which = "rho", out_dir, seed_str = "1";
    int order = -1, m = 0, count = 1, n = 1, jobs = 1, max_m = 8;
    std::vector<std::string> classes{"two", "three", "all"};

    CLI::App* series = app.add_subcommand("series", "print a counting series");
    series->add_option("--class", cls, "series to print")
        ->required()
        ->check(CLI::IsMember({"bargraph", "pp2", "pp3", "pp-all", "one-sided", "R"}));
    series->add_option("--order", order, "truncation order (default 40; 24 for pp-all)");
    series->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    CLI::App* asym = app.add_subcommand("asym", "singularity and amplitude constants");
    asym->add_option("--which", which, "constant or estimate")
        ->required()
        ->check(CLI::IsMember({"rho", "A", "sigma", "sigma-n", "growth"}));
    asym->add_option("--n", n, "index for sigma-n")->check(CLI::NonNegativeNumber);
    asym->add_option("--class", cls, "series for growth (pp2|pp3)")
        ->check(CLI::IsMember({"pp2", "pp3"}));
    asym->add_option("--order", order, "coefficient count for growth");
    asym->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    CLI::App* sample = app.add_subcommand("sample", "draw uniform random polygons");
    sample->add_option("--class", cls, "polygon class")
        ->required()
        ->check(CLI::IsMember({"two", "three", "all"}));
    sample->add_option("-m,--half-perimeter", m, "half-perimeter")->required();
    sample->add_option("-c,--count", count, "number of samples")
        ->check(CLI::NonNegativeNumber);
    sample->add_option("--seed", seed_str, "64-bit seed, or 'random'");
    sample->add_option("--format", format, "svg|ascii|json")
        ->check(CLI::IsMember({"svg", "ascii", "json"}));
    sample->add_option("--out", out_dir, "directory for per-polygon files");
    sample->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    CLI::App* validate = app.add_subcommand("validate", "cross-check the backends");
    validate->add_option("--max-m", max_m, "largest half-perimeter to check");
    validate->add_option("--classes", classes, "subset of two,three,all")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);
    std::string echo = quote_echo(argc, argv);

    try {
        if (*series) {
            int cap = env_order_cap(cls == "pp-all" ? 24 : 200);
            if (order < 0) order = std::min(cls == "pp-all" ? 24 : 40, cap);
            if (order > cap) {
                std::fprintf(stderr,
                             "pp series: order %d exceeds the cap %d for %s "
                             "(set PP_MAX_ORDER to raise it)\n",
                             order, cap, cls.c_str());
                return 2;
            }
            return cmd_series(cls, order, Out(format, echo));
        }
        if (*asym) {
            if (which == "growth") {
                if (cls.empty()) cls = "pp2";
                int cap = env_order_cap(400);
                if (order < 0) order = cls == "pp3" ? 200 : 400;
                if (order < 16 || order > cap) {
                    std::fprintf(stderr,
                                 "pp asym: growth needs --order in [16, %d]\n", cap);
                    return 2;
                }
            }
            return cmd_asym(which, n, cls, order, Out(format, echo));
        }
        if (*sample) {
            if (format == "text") format = "ascii";
            uint64_t seed;
            if (seed_str == "random") {
                std::random_device rd;
                seed = (uint64_t(rd()) << 32) ^ rd();
                std::fprintf(stderr, "# seed %llu\n", (unsigned long long)seed);
            } else {
                try {
                    seed = std::stoull(seed_str);
                } catch (const std::exception&) {
                    std::fprintf(stderr, "pp sample: bad --seed '%s'\n",
                                 seed_str.c_str());
                    return 2;
                }
            }
            return cmd_sample(cls, m, count, seed, format, out_dir, jobs,
                              Out(format, echo));
        }
        if (*validate) return cmd_validate(max_m, classes, Out("text", echo));
    } catch (const std::exception& e) {
        std::fprintf(stderr, "pp: %s\n", e.what());
        return 2;
    }
    return 0;
}
