#pragma once

// The named instance corpus: every built-in FTC-pair and Zinbiel instance the
// CLI and the suite can address, plus the instance-spec JSON entry point for
// parameterized constructions.

#include "ftczin/constructions.hpp"

namespace ftczin {

enum class InstanceKind { Ftc, Zin };

struct InstanceInfo {
    std::string name;
    InstanceKind kind;
    std::string summary;
};

const std::vector<InstanceInfo>& builtinInstances();
bool isZinInstanceName(const std::string& name);

/// Resolves a built-in name; UsageError on unknown names.
FtcPairInstance buildFtcInstance(const std::string& name, const CheckConfig& cfg);
ZinbielInstance buildZinInstance(const std::string& name, const CheckConfig& cfg);

/// Instance-spec JSON:
///   {"construction": "from-integration" | "from-derivation" | "diff-algebra",
///    "carrier": "polynomial" | "hurwitz" | "rb-free",
///    "ring": "Q" | "Z" | "mod <m>",
///    "degreeBound": 12, "structureConstants": {"powerQuotient": d}, "seed": 0}
/// degreeBound falls back to defaultDegreeBound when absent.
FtcPairInstance instanceFromSpecJson(const std::string& jsonText, const CheckConfig& cfg,
                                     int defaultDegreeBound = 12);

/// Named instance, inline JSON ({...}) or a path to a spec file.
FtcPairInstance resolveFtcInstance(const std::string& arg, const CheckConfig& cfg,
                                   int defaultDegreeBound = 12);

}  // namespace ftczin
