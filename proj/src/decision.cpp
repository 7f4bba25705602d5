#include "ucp/decision.hpp"

#include <type_traits>

namespace ucp {

const char* utility_kind_name(UtilityKind kind) {
    switch (kind) {
        case UtilityKind::conflict: return "conflict";
        case UtilityKind::medoid: return "medoid";
        case UtilityKind::kmeans: return "kmeans";
        case UtilityKind::density: return "density";
        case UtilityKind::multiscale_density: return "multiscale-density";
        case UtilityKind::bisection: return "bisection";
        case UtilityKind::birch: return "birch";
        case UtilityKind::diameter: return "diameter";
        case UtilityKind::exemplar: return "exemplar";
        case UtilityKind::subspace: return "subspace";
    }
    throw UcpError("unknown utility kind");
}

UtilityKind utility_kind_from_name(const std::string& name) {
    for (UtilityKind kind :
         {UtilityKind::conflict, UtilityKind::medoid, UtilityKind::kmeans,
          UtilityKind::density, UtilityKind::multiscale_density,
          UtilityKind::bisection, UtilityKind::birch, UtilityKind::diameter,
          UtilityKind::exemplar, UtilityKind::subspace}) {
        if (name == utility_kind_name(kind)) return kind;
    }
    throw ParseError("unknown utility kind: '" + name + "'");
}

int UcpDecisionInstance::n() const {
    return std::visit(
        [](const auto& p) -> int {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, MetricInstance>) {
                return p.n;
            } else if constexpr (std::is_same_v<T, EuclideanInstance>) {
                return p.n;
            } else if constexpr (std::is_same_v<T, std::vector<CFTriple>>) {
                return static_cast<int>(p.size());
            } else if constexpr (std::is_same_v<T, SimilarityMatrix>) {
                return p.n;
            } else {
                return p.cols;  // data matrix: points are columns
            }
        },
        payload);
}

}  // namespace ucp
