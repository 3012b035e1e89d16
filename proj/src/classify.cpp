#include "interact/classify.hpp"

#include "interact/algebra.hpp"
#include "interact/consv.hpp"
#include "interact/error.hpp"
#include "interact/zoo.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>

namespace interact {

namespace {

void guard(int kappa) {
    if (kappa < 1 || kappa > kMaxClassifyKappa) {
        throw Error(ErrorKind::resource, "classify supports 1 <= kappa <= " + std::to_string(kMaxClassifyKappa) +
                                             ", got " + std::to_string(kappa));
    }
}

std::optional<std::string> label_for(const CanonicalForm& form) {
    for (const auto& named : zoo::named_of_size(form.size)) {
        if (canonical_form(named.interaction) == form) {
            return named.label;
        }
    }
    return std::nullopt;
}

ClassCatalog run(int kappa, bool separable_only) {
    const std::size_t n = static_cast<std::size_t>(kappa) + 1;
    const StateSet states = StateSet::range(n);

    std::map<CanonicalForm, Interaction> found;
    std::map<RationalMatrix, CanonicalForm> canon_cache;
    std::deque<const Interaction*> queue;

    const auto visit = [&](const ConservedBasis& basis) {
        auto it = canon_cache.find(basis.vectors);
        if (it == canon_cache.end()) {
            it = canon_cache.emplace(basis.vectors, canonical_form(basis)).first;
        }
        const CanonicalForm& form = it->second;
        if (found.count(form) != 0) {
            return;
        }
        auto rep = completion_of_basis(ConservedBasis{states, form.matrix});
        const auto pos = found.emplace(form, std::move(rep)).first;
        if (!separable_only || is_separable(ConservedBasis{states, form.matrix})) {
            queue.push_back(&pos->second);
        }
    };

    visit(compute_consv(completion(zoo::multi_species(kappa))));
    while (!queue.empty()) {
        const Interaction& node = *queue.front();
        queue.pop_front();
        const auto parts = components(node);
        const std::size_t dim = compute_consv(node).dim();
        for (std::size_t a = 0; a < parts.cell_count(); ++a) {
            for (std::size_t b = a + 1; b < parts.cell_count(); ++b) {
                const auto merged = merge(node, parts.cell(a).front(), parts.cell(b).front());
                auto basis = compute_consv(merged);
                if (basis.dim() + 1 != dim) {
                    throw Error(ErrorKind::domain, "merge did not lower the conserved dimension by one");
                }
                visit(basis);
            }
        }
    }

    ClassCatalog catalog;
    catalog.kappa = kappa;
    for (auto& [form, rep] : found) {
        ConservedBasis basis{states, form.matrix};
        const bool sep = is_separable(basis);
        if (separable_only && !sep) {
            continue;
        }
        catalog.classes.push_back({form, rep, form.dim, sep, label_for(form)});
    }
    std::stable_sort(catalog.classes.begin(), catalog.classes.end(),
                     [](const ClassRecord& x, const ClassRecord& y) {
                         if (x.dim != y.dim) {
                             return x.dim > y.dim;
                         }
                         return x.canonical < y.canonical;
                     });
    return catalog;
}

} // namespace

const ClassCatalog& classify(int kappa, bool separable_only) {
    guard(kappa);
    static std::mutex mutex;
    static std::map<std::pair<int, bool>, std::unique_ptr<ClassCatalog>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{kappa, separable_only}];
    if (!slot) {
        slot = std::make_unique<ClassCatalog>(run(kappa, separable_only));
    }
    return *slot;
}

std::vector<ClassRecord> classes_at_dim(int kappa, std::size_t dim) {
    std::vector<ClassRecord> out;
    for (const auto& rec : classify(kappa).classes) {
        if (rec.dim == dim) {
            out.push_back(rec);
        }
    }
    return out;
}

std::optional<ClassRecord> identify(const Interaction& inter) {
    const int kappa = static_cast<int>(inter.size()) - 1;
    guard(kappa);
    const auto basis = compute_consv(inter);
    const auto form = canonical_form(basis);
    // Separable classes only have separable ancestors, so the smaller catalog suffices for them.
    const auto& catalog = classify(kappa, is_separable(basis));
    for (const auto& rec : catalog.classes) {
        if (rec.canonical == form) {
            return rec;
        }
    }
    return std::nullopt;
}

} // namespace interact
