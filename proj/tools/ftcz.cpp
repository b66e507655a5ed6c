// ftcz: command-line front end. Calculators for the carrier products,
// law checking with witness output, FTC <-> Zinbiel conversion, round trips,
// and the full corpus suite. Exit codes: 0 all holds, 1 violation found,
// 2 usage/parse error, 3 construction error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "ftczin/instances.hpp"
#include "ftczin/suite.hpp"

using namespace ftczin;

namespace {

constexpr int ExitHolds = 0;
constexpr int ExitViolation = 1;
constexpr int ExitUsage = 2;
constexpr int ExitConstruction = 3;

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::size_t samples = 500;
    int degreeBound = 12;
    std::string format = "text";
    int jobs = 1;

    CheckConfig cfg() const { return {seed, samples}; }
    bool json() const { return format == "json"; }
};

nlohmann::json reportJson(const LawReport& rep) { return nlohmann::json::parse(toJsonText(rep)); }

void printReportText(const LawReport& rep, std::ostream& os) {
    os << rep.law << ": " << rep.statusText() << " (" << rep.samplesTried << " cases, seed "
       << rep.seed << ")\n";
    if (rep.witness) {
        os << "  witness:\n";
        for (const auto& [name, value] : rep.witness->inputs)
            os << "    " << name << " = " << value << "\n";
        os << "    lhs = " << rep.witness->lhs << "\n";
        os << "    rhs = " << rep.witness->rhs << "\n";
    }
}

int emitReports(const std::vector<LawReport>& reports, const GlobalOptions& opt) {
    bool violated = false;
    for (const auto& r : reports) violated = violated || !r.holds;
    if (opt.json()) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(reportJson(r));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) printReportText(r, std::cout);
    }
    return violated ? ExitViolation : ExitHolds;
}

void emitElement(const CarrierElement& x, const GlobalOptions& opt) {
    if (opt.json()) {
        nlohmann::json out;
        out["carrier"] = x.descriptor().str();
        out["result"] = toText(x);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << toText(x) << "\n";
    }
}

int inferBasisSize(const std::string& a, const std::string& b) {
    int maxLetter = 0;
    for (const std::string* s : {&a, &b}) {
        int depth = 0;
        long current = -1;
        for (char c : *s) {
            if (c == '[') depth++;
            if (c == ']') {
                depth--;
                current = -1;
            }
            if (depth > 0 && std::isdigit(static_cast<unsigned char>(c))) {
                current = (current < 0 ? 0 : current) * 10 + (c - '0');
                if (current > maxLetter) maxLetter = static_cast<int>(current);
            } else {
                current = -1;
            }
        }
    }
    return maxLetter + 1;
}

RingDescriptor parseRingFlag(const std::string& text) {
    if (text == "Q" || text == "rationals") return RingDescriptor::rationals();
    if (text == "Z" || text == "integers") return RingDescriptor::integers();
    if (text.rfind("mod ", 0) == 0) return RingDescriptor::modular(Integer(text.substr(4)));
    if (text.rfind("Z/", 0) == 0) return RingDescriptor::modular(Integer(text.substr(2)));
    throw UsageError("unknown ring '" + text + "' (use Q, Z, or 'mod m')");
}

// The Zinbiel instance a name denotes: Zin names directly, FTC names and
// instance specs through the functor F.
ZinbielInstance resolveZinInstance(const std::string& arg, const GlobalOptions& opt) {
    if (isZinInstanceName(arg)) return buildZinInstance(arg, opt.cfg());
    return functorF(resolveFtcInstance(arg, opt.cfg(), opt.degreeBound), opt.cfg());
}

int runCheckLaws(const std::string& instance, const GlobalOptions& opt) {
    FtcPairInstance pair = resolveFtcInstance(instance, opt.cfg(), opt.degreeBound);
    std::vector<LawReport> reports = checkAllLaws(pair, opt.cfg());
    return emitReports(reports, opt);
}

int runRoundtrip(const std::string& instance, const GlobalOptions& opt) {
    std::vector<LawReport> reports;
    if (isZinInstanceName(instance)) {
        ZinRoundtrip rt = buildZinRoundtrip(buildZinInstance(instance, opt.cfg()), opt.cfg());
        reports.push_back(checkRoundtripZin(rt, opt.cfg()));
        reports.push_back(checkZinMorphism(rt.epsilon, rt.FG, rt.zin, opt.cfg()));
        reports.push_back(checkZinMorphism(rt.epsilonInv, rt.zin, rt.FG, opt.cfg()));
    } else {
        FtcRoundtrip rt = buildFtcRoundtrip(
            resolveFtcInstance(instance, opt.cfg(), opt.degreeBound), opt.cfg());
        reports.push_back(checkRoundtripFtc(rt, opt.cfg()));
        reports.push_back(checkFtcMorphism(rt.eta, rt.pair, rt.GF, opt.cfg()));
        reports.push_back(checkFtcMorphism(rt.etaInv, rt.GF, rt.pair, opt.cfg()));
    }
    return emitReports(reports, opt);
}

int runConvert(const std::string& direction, const std::string& instance,
               const GlobalOptions& opt) {
    if (direction == "ftc-to-zin") {
        FtcPairInstance pair = resolveFtcInstance(instance, opt.cfg(), opt.degreeBound);
        ZinbielInstance zin = functorF(pair, opt.cfg());
        nlohmann::json out;
        out["functor"] = "F";
        out["source"] = pair.name;
        out["base"] = zin.base.str() + " restricted to ker(D)";
        out["carrier"] = zin.carrier.str();
        nlohmann::json table = nlohmann::json::array();
        std::size_t rows = 0;
        for (const auto& x : zin.carrierEnum) {
            for (const auto& y : zin.carrierEnum) {
                if (isZero(x) || isZero(y)) continue;
                table.push_back({{"x", toText(x)},
                                 {"y", toText(y)},
                                 {"x <| y", toText(zin.zin(x, y))}});
                if (++rows >= 12) break;
            }
            if (rows >= 12) break;
        }
        out["zinbielOperator"] = std::move(table);
        if (opt.json()) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "F(" << pair.name << ") = (ker(D) in " << zin.base.str() << ", "
                      << zin.carrier.str() << ")\n";
            for (const auto& row : out["zinbielOperator"])
                std::cout << "  " << row["x"].get<std::string>() << " <| "
                          << row["y"].get<std::string>() << " = "
                          << row["x <| y"].get<std::string>() << "\n";
        }
        return ExitHolds;
    }
    if (direction == "zin-to-ftc") {
        ZinbielInstance zin = resolveZinInstance(instance, opt);
        FtcPairInstance pair = functorG(zin, opt.cfg());
        nlohmann::json out;
        out["functor"] = "G";
        out["source"] = zin.name;
        out["algebra"] = pair.algebra.str();
        out["module"] = pair.module.str();
        out["unit"] = toText(oneOf(pair.algebra));
        nlohmann::json table = nlohmann::json::array();
        std::size_t rows = 0;
        for (const auto& x : pair.algebraEnum) {
            table.push_back({{"x", toText(x)},
                             {"D(x)", toText(pair.derivation(x))}});
            if (++rows >= 8) break;
        }
        out["derivation"] = std::move(table);
        nlohmann::json ptable = nlohmann::json::array();
        rows = 0;
        for (const auto& m : pair.moduleEnum) {
            ptable.push_back({{"m", toText(m)}, {"P(m)", toText(pair.integration(m))}});
            if (++rows >= 8) break;
        }
        out["integration"] = std::move(ptable);
        if (opt.json()) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "G(" << zin.name << ") = (" << pair.algebra.str() << " <=> "
                      << pair.module.str() << ")\n";
            for (const auto& row : out["derivation"])
                std::cout << "  pi" << row["x"].get<std::string>() << " = "
                          << row["D(x)"].get<std::string>() << "\n";
            for (const auto& row : out["integration"])
                std::cout << "  iota(" << row["m"].get<std::string>() << ") = "
                          << row["P(m)"].get<std::string>() << "\n";
        }
        return ExitHolds;
    }
    throw UsageError("convert direction must be ftc-to-zin or zin-to-ftc");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ftcz: exact FTC-pair and Zinbiel algebra calculator"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--seed", opt.seed, "law-check seed (FTC_SEED overrides)");
    app.add_option("--samples", opt.samples, "samples per law check (default 500)");
    app.add_option("--degree-bound", opt.degreeBound, "graded inversion bound (default 12)");
    app.add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "parallel workers for the suite");

    std::string argA, argB, instance, direction;
    int basisOverride = 0, truncOrder = 4;
    std::string ringName = "Q";

    CLI::App* shuffleCmd = app.add_subcommand("shuffle", "shuffle product of word sums");
    shuffleCmd->add_option("u", argA)->required();
    shuffleCmd->add_option("v", argB)->required();
    shuffleCmd->add_option("--basis", basisOverride, "basis size (default: inferred)");
    shuffleCmd->add_option("--ring", ringName, "coefficient ring");

    CLI::App* mixCmd =
        app.add_subcommand("mixshuffle", "augmented mixable shuffle over k[y]/(y^d) letters");
    mixCmd->add_option("s", argA)->required();
    mixCmd->add_option("t", argB)->required();
    mixCmd->add_option("--order", truncOrder, "quotient order d (default 4)");
    mixCmd->add_option("--ring", ringName, "coefficient ring");

    CLI::App* hurCmd = app.add_subcommand("hurwitz-mul", "Hurwitz product of finite sequences");
    hurCmd->add_option("f", argA)->required();
    hurCmd->add_option("g", argB)->required();
    hurCmd->add_option("--ring", ringName, "coefficient ring (default Q)");

    CLI::App* zinCmd = app.add_subcommand("zinbiel", "apply an instance's Zinbiel operator");
    zinCmd->add_option("x", argA)->required();
    zinCmd->add_option("y", argB)->required();
    zinCmd->add_option("--instance", instance)->required();

    CLI::App* lawsCmd = app.add_subcommand("check-laws", "run the five FTC laws");
    lawsCmd->add_option("--instance", instance)->required();

    CLI::App* convCmd = app.add_subcommand("convert", "apply the functor F or G");
    convCmd->add_option("direction", direction)->required();
    convCmd->add_option("--instance", instance)->required();

    CLI::App* rtCmd = app.add_subcommand("roundtrip", "check the natural isomorphisms");
    rtCmd->add_option("--instance", instance)->required();

    std::string seedsRange;
    CLI::App* suiteCmd = app.add_subcommand("suite", "run every corpus check (JSON output)");
    suiteCmd->add_option("--seeds", seedsRange, "inclusive seed range 'a..b'");

    CLI::App* listCmd = app.add_subcommand("instances", "list built-in instances");

    // global flags remain usable after the verb
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ExitHolds : ExitUsage;
    }

    if (const char* env = std::getenv("FTC_SEED")) {
        try {
            opt.seed = std::stoull(env);
        } catch (...) {
            std::cerr << "error: FTC_SEED is not an integer: " << env << "\n";
            return ExitUsage;
        }
    }

    try {
        if (shuffleCmd->parsed()) {
            RingDescriptor ring = parseRingFlag(ringName);
            int basis = basisOverride > 0 ? basisOverride : inferBasisSize(argA, argB);
            const CarrierDescriptor sh = CarrierDescriptor::tensor(basis, false, ring);
            emitElement(shuffleProduct(parseElement(argA, sh), parseElement(argB, sh)), opt);
            return ExitHolds;
        }
        if (mixCmd->parsed()) {
            RingDescriptor ring = parseRingFlag(ringName);
            const CarrierDescriptor rb =
                CarrierDescriptor::mixableWords(StructureTable::powerQuotient(truncOrder, ring));
            emitElement(
                mixableShuffleProduct(parseElement(argA, rb), parseElement(argB, rb)), opt);
            return ExitHolds;
        }
        if (hurCmd->parsed()) {
            RingDescriptor ring = parseRingFlag(ringName);
            const CarrierDescriptor h =
                CarrierDescriptor::hurwitz(CarrierDescriptor::scalarRing(ring));
            emitElement(hurwitzMul(parseElement(argA, h), parseElement(argB, h)), opt);
            return ExitHolds;
        }
        if (zinCmd->parsed()) {
            ZinbielInstance zin = resolveZinInstance(instance, opt);
            CarrierElement x = parseElement(argA, zin.carrier);
            CarrierElement y = parseElement(argB, zin.carrier);
            emitElement(zin.zin(x, y), opt);
            return ExitHolds;
        }
        if (lawsCmd->parsed()) return runCheckLaws(instance, opt);
        if (convCmd->parsed()) return runConvert(direction, instance, opt);
        if (rtCmd->parsed()) return runRoundtrip(instance, opt);
        if (suiteCmd->parsed()) {
            SuiteOptions so;
            so.seeds = {opt.seed};
            if (!seedsRange.empty()) {
                auto dots = seedsRange.find("..");
                if (dots == std::string::npos)
                    throw UsageError("--seeds wants an inclusive range 'a..b'");
                std::uint64_t lo = std::stoull(seedsRange.substr(0, dots));
                std::uint64_t hi = std::stoull(seedsRange.substr(dots + 2));
                if (hi < lo) throw UsageError("--seeds range is empty");
                so.seeds.clear();
                for (std::uint64_t sd = lo; sd <= hi; ++sd) so.seeds.push_back(sd);
            }
            so.samples = opt.samples;
            so.jobs = opt.jobs;
            SuiteResult result = runSuite(so);
            std::cout << result.json;
            return result.allMatched ? ExitHolds : ExitViolation;
        }
        if (listCmd->parsed()) {
            for (const auto& info : builtinInstances())
                std::cout << info.name << "  ["
                          << (info.kind == InstanceKind::Ftc ? "ftc" : "zin") << "]  "
                          << info.summary << "\n";
            return ExitHolds;
        }
        return ExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return ExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return ExitUsage;
    } catch (const InvalidInstanceError& e) {
        std::cerr << "construction error: " << e.what() << "\n";
        for (const auto& rep : e.reports) printReportText(rep, std::cerr);
        return ExitConstruction;
    } catch (const NotInvertibleError& e) {
        std::cerr << "construction error: " << e.what() << " (element " << e.element << ")\n";
        return ExitConstruction;
    } catch (const Error& e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return ExitConstruction;
    }
}
