#pragma once

#include <optional>
#include <string>
#include <vector>

namespace plab {

// Concrete counterexample for a failed law: the basis indices (1-based, in
// the order the law quantifies over) plus the two sides that disagreed.
struct Witness {
    std::vector<int> indices;
    std::string lhs;
    std::string rhs;
};

struct CheckItem {
    std::string law;   // short name of the identity tested
    bool pass = true;
    std::optional<Witness> witness; // first failure only
};

// Outcome of a structure check: one item per law in the definition.
struct CheckReport {
    std::string name;  // what was checked, e.g. "pre-lie(UT2)"
    std::vector<CheckItem> items;

    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }

    CheckItem& item(const std::string& law) {
        for (auto& it : items)
            if (it.law == law) return it;
        items.push_back(CheckItem{law, true, std::nullopt});
        return items.back();
    }

    // Record a failure; keeps only the first witness per law.
    void fail(const std::string& law, std::vector<int> indices, std::string lhs,
              std::string rhs) {
        CheckItem& it = item(law);
        if (it.pass) it.witness = Witness{std::move(indices), std::move(lhs), std::move(rhs)};
        it.pass = false;
    }

    void merge(const CheckReport& other, const std::string& prefix = "") {
        for (const auto& it : other.items) {
            CheckItem copy = it;
            if (!prefix.empty()) copy.law = prefix + "." + copy.law;
            items.push_back(std::move(copy));
        }
    }
};

} // namespace plab
