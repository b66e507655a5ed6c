#include "ftczin/suite.hpp"

#include <atomic>
#include <functional>
#include <json.hpp>
#include <thread>

#include "ftczin/instances.hpp"

namespace ftczin {

namespace {

const RingDescriptor Q = RingDescriptor::rationals();

struct SuiteEntry {
    std::string instance;
    std::string law;
    bool expectHolds = true;
    std::function<LawReport(const CheckConfig&)> run;
};

// ---- oracle / content checks packaged as LawReports ------------------------

LawReport shuffleOracleAgreement(const CheckConfig& cfg) {
    LawReport rep{.law = "shuffle-oracle-agreement", .instance = "shuffle-words",
                  .seed = cfg.seed};
    const CarrierDescriptor sh = CarrierDescriptor::tensor(3, false, Q);
    std::vector<Word> words;
    for (int len = 1; len <= 5; ++len) {
        std::vector<Word> level;
        if (len == 1)
            for (int l = 0; l < 3; ++l) level.push_back(Word{{l}});
        else
            for (const Word& w : words)
                if (static_cast<int>(w.size()) == len - 1)
                    for (int l = 0; l < 3; ++l) {
                        Word n = w;
                        n.letters.push_back(l);
                        level.push_back(n);
                    }
        words.insert(words.end(), level.begin(), level.end());
    }
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.size() + v.size() > 6) continue;
            ++rep.samplesTried;
            CarrierElement lhs = shuffleProduct(tensorWord(sh, u), tensorWord(sh, v));
            CarrierElement rhs = shuffleProductOracle(sh, u, v);
            if (lhs == rhs) continue;
            rep.holds = false;
            Witness w;
            w.inputs = {{"clause", "recursion = interleaving enumeration"},
                        {"u", u.str()},
                        {"v", v.str()}};
            w.lhs = toText(lhs);
            w.rhs = toText(rhs);
            w.recheck = [sh, u, v]() {
                return !(shuffleProduct(tensorWord(sh, u), tensorWord(sh, v)) ==
                         shuffleProductOracle(sh, u, v));
            };
            rep.witness = std::move(w);
            return rep;
        }
    return rep;
}

LawReport symmetrizedEqualsShuffle(const CheckConfig& cfg) {
    LawReport rep{.law = "symmetrized-equals-shuffle", .instance = "shuffle-zin",
                  .seed = cfg.seed};
    ZinbielInstance z = shuffleZinbiel(3, Q);
    std::vector<Word> words;
    for (int len = 1; len <= 4; ++len) {
        std::vector<Word> level;
        if (len == 1)
            for (int l = 0; l < 3; ++l) level.push_back(Word{{l}});
        else
            for (const Word& w : words)
                if (static_cast<int>(w.size()) == len - 1)
                    for (int l = 0; l < 3; ++l) {
                        Word n = w;
                        n.letters.push_back(l);
                        level.push_back(n);
                    }
        words.insert(words.end(), level.begin(), level.end());
    }
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.size() + v.size() > 5) continue;
            ++rep.samplesTried;
            CarrierElement x = tensorWord(z.carrier, u);
            CarrierElement y = tensorWord(z.carrier, v);
            CarrierElement lhs = symmetrizedProduct(z, x, y);
            CarrierElement rhs = shuffleProduct(x, y);
            if (lhs == rhs) continue;
            rep.holds = false;
            Witness w;
            w.inputs = {{"clause", "x *<| y = x sh y"}, {"u", u.str()}, {"v", v.str()}};
            w.lhs = toText(lhs);
            w.rhs = toText(rhs);
            w.recheck = [z, x, y]() {
                return !(symmetrizedProduct(z, x, y) == shuffleProduct(x, y));
            };
            rep.witness = std::move(w);
            return rep;
        }
    return rep;
}

LawReport polyZinClosedForm(const CheckConfig& cfg) {
    LawReport rep{.law = "poly-zin-closed-form", .instance = "poly-zin", .seed = cfg.seed};
    ZinbielInstance z = buildZinInstance("poly-zin", cfg);
    const CarrierDescriptor poly = z.carrier;
    const Scalar one = Scalar::one(Q);
    for (long m = 0; m <= 6 && rep.holds; ++m)
        for (long n = 0; n <= 6; ++n) {
            rep.samplesTried += 2;
            CarrierElement xm = polyMonomial(poly, m, one);
            CarrierElement xn = polyMonomial(poly, n, one);
            CarrierElement zinGot = z.zin(xm, xn);
            CarrierElement zinWant = polyMonomial(poly, m + n + 1, Scalar::rational(1, n + 1));
            CarrierElement symGot = symmetrizedProduct(z, xm, xn);
            CarrierElement symWant = polyMonomial(
                poly, m + n + 1, Scalar::rational(m + n + 2, (m + 1) * (n + 1)));
            if (zinGot == zinWant && symGot == symWant) continue;
            rep.holds = false;
            Witness w;
            w.inputs = {{"clause", "x^m <| x^n = x^(m+n+1)/(n+1)"},
                        {"m", std::to_string(m)},
                        {"n", std::to_string(n)}};
            w.lhs = toText(zinGot == zinWant ? symGot : zinGot);
            w.rhs = toText(zinGot == zinWant ? symWant : zinWant);
            w.recheck = [z, xm, xn, zinWant]() { return !(z.zin(xm, xn) == zinWant); };
            rep.witness = std::move(w);
            break;
        }
    return rep;
}

LawReport rbZinMatchesShuffle(const CheckConfig& cfg) {
    LawReport rep{.law = "rb-zin-matches-shuffle", .instance = "rb-free", .seed = cfg.seed};
    FreeRotaBaxter rb = freeRotaBaxter(StructureTable::powerQuotient(4, Q));
    ZinbielInstance viaP = zinbielFromIntegration(
        "rb-zin", rb.integration,
        [](const CarrierElement& a, const CarrierElement& m) { return mul(a, m); },
        defaultSampler(rb.carrier), smallEnumeration(rb.carrier), cfg);
    ZinbielInstance shuffle = shuffleZinbiel(4, Q);
    std::vector<Word> words;
    for (int a = 0; a < 4; ++a) {
        words.push_back(Word{{a}});
        for (int b = 0; b < 4; ++b) words.push_back(Word{{a, b}});
    }
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.size() + v.size() > 3) continue;
            ++rep.samplesTried;
            CarrierElement got = viaP.zin(tensorWord(rb.carrier, u), tensorWord(rb.carrier, v));
            CarrierElement want =
                shuffle.zin(tensorWord(shuffle.carrier, u), tensorWord(shuffle.carrier, v));
            if (got.tensor().words == want.tensor().words) continue;
            rep.holds = false;
            Witness w;
            w.inputs = {{"clause", "<|_P on RB(A) = shuffle Zinbiel"},
                        {"u", u.str()},
                        {"v", v.str()}};
            w.lhs = toText(got);
            w.rhs = toText(want);
            w.recheck = []() { return true; };
            rep.witness = std::move(w);
            return rep;
        }
    return rep;
}

// (a,x) y differs from (a,x)(0,y): the suite must exhibit a witness.
LawReport semidirectRemarkWitness(const CheckConfig& cfg) {
    LawReport rep{.law = "semidirect-remark-witness", .instance = "k x| Sh+", .seed = cfg.seed};
    ZinbielInstance zin = shuffleZinbiel(2, Q);
    FtcPairInstance g = functorG(zin, cfg);
    const CarrierDescriptor sd = g.algebra;
    CarrierElement w = tensorWord(zin.carrier, Word{{0}});
    CarrierElement ax = makeSemidirect(sd, makeScalar(zin.base, Scalar::one(Q)), w);
    CarrierElement viaAction = g.integration(g.action(ax, w));  // iota((a,x) y)
    CarrierElement viaProduct = mul(ax, g.integration(w));      // (a,x) iota(y)
    rep.samplesTried = 1;
    if (viaAction == viaProduct) {
        rep.holds = false;
        Witness wit;
        wit.inputs = {{"clause", "iota((a,x)y) != (a,x)iota(y) for some a, x, y"},
                      {"a", "1"},
                      {"x", toText(w)},
                      {"y", toText(w)}};
        wit.lhs = toText(viaAction);
        wit.rhs = toText(viaProduct);
        wit.recheck = []() { return true; };
        rep.witness = std::move(wit);
    }
    return rep;
}

LawReport ftc1HybridImpliesRb(const std::string& name, const CheckConfig& cfg) {
    LawReport rep{.law = "ftc1-hybrid-implies-rb", .instance = name, .seed = cfg.seed};
    FtcPairInstance pair = buildFtcInstance(name, cfg);
    LawReport ftc1 = checkFtc1(pair, cfg);
    LawReport hybrid = checkHybridRotaBaxter(pair, cfg);
    LawReport rb = checkRotaBaxter(pair, cfg);
    rep.samplesTried = ftc1.samplesTried + hybrid.samplesTried + rb.samplesTried;
    if (ftc1.holds && hybrid.holds && !rb.holds) {
        rep.holds = false;
        rep.witness = rb.witness;
    }
    return rep;
}

// ---- entry table ------------------------------------------------------------

struct LawExpectation {
    const char* law;
    bool holds;
};

void pushFtcEntries(std::vector<SuiteEntry>& entries, const std::string& name,
                    const std::vector<LawExpectation>& laws, bool roundtrip) {
    for (const auto& [law, holds] : laws) {
        std::string lawName = law;
        entries.push_back(
            {name, lawName, holds, [name, lawName](const CheckConfig& cfg) {
                 FtcPairInstance pair = buildFtcInstance(name, cfg);
                 if (lawName == "leibniz") return checkLeibniz(pair, cfg);
                 if (lawName == "rota-baxter") return checkRotaBaxter(pair, cfg);
                 if (lawName == "ftc1") return checkFtc1(pair, cfg);
                 if (lawName == "ftc2") return checkFtc2(pair, cfg);
                 if (lawName == "hybrid-rb") return checkHybridRotaBaxter(pair, cfg);
                 if (lawName == "ftc2-equivalence") return checkFtc2Equivalence(pair, cfg);
                 if (lawName == "augmented") return checkAugmented(pair, cfg);
                 if (lawName == "action-laws") return checkActionLaws(pair, cfg);
                 if (lawName == "kerd-linearity") return checkKerDLinearity(pair, cfg);
                 throw Error("unknown suite law " + lawName);
             }});
    }
    entries.push_back({name, "ftc1-hybrid-implies-rb", true, [name](const CheckConfig& cfg) {
                           return ftc1HybridImpliesRb(name, cfg);
                       }});
    if (roundtrip) {
        entries.push_back({name, "roundtrip-ftc", true, [name](const CheckConfig& cfg) {
                               FtcPairInstance pair = buildFtcInstance(name, cfg);
                               return checkRoundtripFtc(buildFtcRoundtrip(pair, cfg), cfg);
                           }});
        entries.push_back({name, "augmented-correspondence", true,
                           [name](const CheckConfig& cfg) {
                               FtcPairInstance pair = buildFtcInstance(name, cfg);
                               return checkAugmentedCorrespondence(pair, cfg);
                           }});
    }
}

std::vector<SuiteEntry> buildEntries() {
    std::vector<SuiteEntry> entries;
    const std::vector<LawExpectation> allHold = {
        {"leibniz", true},  {"rota-baxter", true},      {"ftc1", true},
        {"ftc2", true},     {"hybrid-rb", true},        {"ftc2-equivalence", true},
        {"action-laws", true}, {"kerd-linearity", true},
    };

    for (const char* name : {"poly-ftc", "hurwitz-ftc", "hurwitz-ftc-mod2", "shuffle-ftc",
                             "rb-free", "poly-derivation-construction"}) {
        auto laws = allHold;
        laws.push_back({"augmented", true});
        pushFtcEntries(entries, name, laws, true);
    }
    {
        auto laws = allHold;
        laws.push_back({"augmented", false});  // ker(D) = A = Q[y]/(y^2) is 2-dimensional
        pushFtcEntries(entries, "hurwitz-dual-numbers", laws, true);
    }
    {
        auto laws = allHold;
        laws.push_back({"augmented", false});  // ker(D) is all of Q[x]
        pushFtcEntries(entries, "zero-both", laws, true);
    }
    // the separating example: FTC2 without FTC1
    pushFtcEntries(entries, "zero-integration",
                   {{"leibniz", true},
                    {"rota-baxter", true},
                    {"ftc1", false},
                    {"ftc2", true},
                    {"hybrid-rb", true},
                    {"ftc2-equivalence", true},
                    {"action-laws", true},
                    {"kerd-linearity", true},
                    {"augmented", false}},
                   false);
    // planted mutations: every violation must be detected
    pushFtcEntries(entries, "poly-mutated-derivation",
                   {{"leibniz", false},
                    {"rota-baxter", true},
                    {"ftc1", false},
                    {"ftc2", false},
                    {"hybrid-rb", false},
                    {"ftc2-equivalence", true}},
                   false);
    pushFtcEntries(entries, "poly-mutated-integration",
                   {{"leibniz", true},
                    {"rota-baxter", false},
                    {"ftc1", false},
                    {"ftc2", false},
                    {"hybrid-rb", false},
                    {"ftc2-equivalence", true}},
                   false);
    pushFtcEntries(entries, "poly-derivation-zero-integration",
                   {{"leibniz", true},
                    {"rota-baxter", true},
                    {"ftc1", false},
                    {"ftc2", false},
                    {"hybrid-rb", false},
                    {"ftc2-equivalence", true}},
                   false);
    pushFtcEntries(entries, "hurwitz-mutated-derivation",
                   {{"leibniz", false},
                    {"rota-baxter", true},
                    {"ftc1", false},
                    {"ftc2", false},
                    {"hybrid-rb", false},
                    {"ftc2-equivalence", true}},
                   false);

    // Zinbiel corpus
    for (const char* name : {"shuffle-zin", "poly-zin", "hurwitz-zin"}) {
        std::string n = name;
        entries.push_back({n, "zinbiel-identity", true, [n](const CheckConfig& cfg) {
                               return checkZinbielIdentity(buildZinInstance(n, cfg), cfg);
                           }});
        entries.push_back({n, "bilinearity", true, [n](const CheckConfig& cfg) {
                               return checkBilinearity(buildZinInstance(n, cfg), cfg);
                           }});
        entries.push_back({n, "roundtrip-zin", true, [n](const CheckConfig& cfg) {
                               ZinRoundtrip rt = buildZinRoundtrip(buildZinInstance(n, cfg), cfg);
                               return checkRoundtripZin(rt, cfg);
                           }});
        entries.push_back(
            {n, "augmented-correspondence-zin", true, [n](const CheckConfig& cfg) {
                 return checkAugmentedCorrespondenceZin(buildZinInstance(n, cfg), cfg);
             }});
        entries.push_back({n, "naturality-zin(id)", true, [n](const CheckConfig& cfg) {
                               ZinRoundtrip rt = buildZinRoundtrip(buildZinInstance(n, cfg), cfg);
                               ZinMorphism id{"id", identityOperator(rt.zin.base),
                                              identityOperator(rt.zin.carrier)};
                               return checkNaturalityZin(id, rt, rt, cfg);
                           }});
    }
    entries.push_back({"shuffle-zin-dropped-summand", "zinbiel-identity", false,
                       [](const CheckConfig& cfg) {
                           return checkZinbielIdentity(
                               buildZinInstance("shuffle-zin-dropped-summand", cfg), cfg);
                       }});

    // morphisms and naturality
    entries.push_back({"poly-ftc", "ftc-morphism(eta)", true, [](const CheckConfig& cfg) {
                           FtcRoundtrip rt = buildFtcRoundtrip(polynomialPair(), cfg);
                           return checkFtcMorphism(rt.eta, rt.pair, rt.GF, cfg);
                       }});
    entries.push_back({"poly-ftc", "ftc-morphism(eta_inv)", true, [](const CheckConfig& cfg) {
                           FtcRoundtrip rt = buildFtcRoundtrip(polynomialPair(), cfg);
                           return checkFtcMorphism(rt.etaInv, rt.GF, rt.pair, cfg);
                       }});
    entries.push_back({"poly-ftc", "naturality-ftc(id)", true, [](const CheckConfig& cfg) {
                           FtcRoundtrip rt = buildFtcRoundtrip(polynomialPair(), cfg);
                           FtcMorphism id{"id", identityOperator(rt.pair.algebra),
                                          identityOperator(rt.pair.module)};
                           return checkNaturalityFtc(id, rt, rt, cfg);
                       }});
    entries.push_back({"shuffle-iso", "ftc-morphism(iso)", true, [](const CheckConfig& cfg) {
                           ShuffleIso iso = shuffleIso(3, Q, cfg);
                           return checkFtcMorphism(iso.iso, iso.semidirect, iso.shuffle, cfg);
                       }});
    entries.push_back({"shuffle-iso", "ftc-morphism(iso_inv)", true, [](const CheckConfig& cfg) {
                           ShuffleIso iso = shuffleIso(3, Q, cfg);
                           return checkFtcMorphism(iso.isoInv, iso.shuffle, iso.semidirect, cfg);
                       }});
    entries.push_back({"shuffle-iso", "naturality-ftc(iso)", true, [](const CheckConfig& cfg) {
                           ShuffleIso iso = shuffleIso(3, Q, cfg);
                           FtcRoundtrip rtSd = buildFtcRoundtrip(iso.semidirect, cfg);
                           FtcRoundtrip rtSh = buildFtcRoundtrip(iso.shuffle, cfg);
                           return checkNaturalityFtc(iso.iso, rtSd, rtSh, cfg);
                       }});
    entries.push_back({"shuffle-ftc", "ftc-morphism(sign-mutation)", false,
                       [](const CheckConfig& cfg) {
                           FtcPairInstance sh = shufflePair(3, Q);
                           LinearOperator neg{"-id", sh.module, sh.module,
                                              [](const CarrierElement& x) {
                                                  return negate(x);
                                              }};
                           FtcMorphism bad{"neg", identityOperator(sh.algebra), neg};
                           return checkFtcMorphism(bad, sh, sh, cfg);
                       }});
    entries.push_back({"shuffle-ftc", "naturality-ftc(sign-mutation)", false,
                       [](const CheckConfig& cfg) {
                           FtcRoundtrip rt = buildFtcRoundtrip(shufflePair(3, Q), cfg);
                           LinearOperator neg{"-id", rt.pair.module, rt.pair.module,
                                              [](const CarrierElement& x) {
                                                  return negate(x);
                                              }};
                           FtcMorphism bad{"neg", identityOperator(rt.pair.algebra), neg};
                           return checkNaturalityFtc(bad, rt, rt, cfg);
                       }});
    entries.push_back({"shuffle-zin", "zin-morphism(sign-mutation)", false,
                       [](const CheckConfig& cfg) {
                           ZinbielInstance z = shuffleZinbiel(3, Q);
                           LinearOperator neg{"-id", z.carrier, z.carrier,
                                              [](const CarrierElement& x) {
                                                  return negate(x);
                                              }};
                           ZinMorphism bad{"neg", identityOperator(z.base), neg};
                           return checkZinMorphism(bad, z, z, cfg);
                       }});

    // oracle and content agreements
    entries.push_back({"shuffle-words", "shuffle-oracle-agreement", true,
                       [](const CheckConfig& cfg) { return shuffleOracleAgreement(cfg); }});
    entries.push_back({"shuffle-zin", "symmetrized-equals-shuffle", true,
                       [](const CheckConfig& cfg) { return symmetrizedEqualsShuffle(cfg); }});
    entries.push_back({"poly-zin", "poly-zin-closed-form", true,
                       [](const CheckConfig& cfg) { return polyZinClosedForm(cfg); }});
    entries.push_back({"rb-free", "rb-zin-matches-shuffle", true,
                       [](const CheckConfig& cfg) { return rbZinMatchesShuffle(cfg); }});
    entries.push_back({"k x| Sh+", "semidirect-remark-witness", true,
                       [](const CheckConfig& cfg) { return semidirectRemarkWitness(cfg); }});
    return entries;
}

}  // namespace

SuiteResult runSuite(const SuiteOptions& options) {
    const std::vector<SuiteEntry> base = buildEntries();
    struct Job {
        const SuiteEntry* entry;
        CheckConfig cfg;
    };
    std::vector<Job> jobs;
    for (std::uint64_t seed : options.seeds)
        for (const auto& e : base) jobs.push_back({&e, CheckConfig{seed, options.samples}});

    std::vector<LawReport> reports(jobs.size());
    const int workers = std::max(1, options.jobs);
    if (workers == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            reports[i] = jobs[i].entry->run(jobs[i].cfg);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                reports[i] = jobs[i].entry->run(jobs[i].cfg);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    nlohmann::json out;
    out["schemaVersion"] = 1;
    out["samples"] = options.samples;
    out["seeds"] = options.seeds;
    out["entries"] = nlohmann::json::array();
    std::size_t mismatched = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const SuiteEntry& e = *jobs[i].entry;
        const LawReport& r = reports[i];
        bool matched = r.holds == e.expectHolds;
        if (!matched) ++mismatched;
        nlohmann::json j = nlohmann::json::parse(toJsonText(r));
        j["instance"] = e.instance;
        j["law"] = e.law;
        j["expected"] = e.expectHolds ? "holds-on-samples" : "violated";
        j["matched"] = matched;
        out["entries"].push_back(std::move(j));
    }
    out["summary"] = {{"total", jobs.size()},
                      {"matched", jobs.size() - mismatched},
                      {"mismatched", mismatched}};

    SuiteResult result;
    result.json = out.dump(2) + "\n";
    result.allMatched = mismatched == 0;
    result.total = jobs.size();
    result.mismatched = mismatched;
    return result;
}

}  // namespace ftczin
