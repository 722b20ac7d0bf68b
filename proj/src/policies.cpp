#include "archtrunc/policies.hpp"

#include <string>

namespace archtrunc {

std::string_view to_string(PolicyId id) noexcept
{
    switch (id) {
    case PolicyId::Nsga2OneOff:
        return "nsga2-oneoff";
    case PolicyId::Nsga2Iterative:
        return "nsga2-iterative";
    case PolicyId::SmsRemoval:
        return "sms-removal";
    case PolicyId::HvInclusion:
        return "hv-inclusion";
    case PolicyId::Ibea:
        return "ibea";
    case PolicyId::MoeadPbi:
        return "moead-pbi";
    case PolicyId::Nsga3:
        return "nsga3";
    }
    return "unknown";
}

PolicyId parse_policy(std::string_view name)
{
    for (auto id : kAllPolicies) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw ContractViolation("unknown policy '" + std::string(name) + "'");
}

bool uses_weights(PolicyId id) noexcept
{
    return id == PolicyId::MoeadPbi || id == PolicyId::Nsga3;
}

std::vector<Solution> truncate(PolicyId policy, std::span<Solution const> cands, std::size_t mu, PolicyContext const& ctx,
                               TruncationDiagnostics* diagnostics)
{
    if (mu == 0) {
        throw ContractViolation("archive capacity must be positive");
    }
    std::vector<Solution> filtered;
    if (ctx.dominance_prefilter) {
        filtered = nondominated_filter(cands);
        cands = filtered;
    }
    switch (policy) {
    case PolicyId::Nsga2OneOff:
        return truncate_nsga2_oneoff(cands, mu, ctx);
    case PolicyId::Nsga2Iterative:
        return truncate_nsga2_iterative(cands, mu, ctx);
    case PolicyId::SmsRemoval:
        return truncate_sms_removal(cands, mu, ctx);
    case PolicyId::HvInclusion:
        return truncate_hv_inclusion(cands, mu, ctx);
    case PolicyId::Ibea:
        return truncate_ibea(cands, mu, ctx);
    case PolicyId::MoeadPbi:
        return truncate_moead(cands, mu, ctx);
    case PolicyId::Nsga3:
        return truncate_nsga3(cands, mu, ctx, diagnostics);
    }
    throw ContractViolation("unknown policy");
}

} // namespace archtrunc
