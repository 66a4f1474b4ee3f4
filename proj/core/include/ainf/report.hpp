#pragma once

#include <string>
#include <vector>

namespace ainf {

/// Outcome of a family of checks. Each item carries the lexicographically
/// first failing witness when it fails.
struct Report {
    struct Item {
        std::string name;
        bool passed = true;
        std::string witness;
    };

    std::vector<Item> items;

    void pass(std::string name) { items.push_back({std::move(name), true, {}}); }
    void fail(std::string name, std::string witness) { items.push_back({std::move(name), false, std::move(witness)}); }
    void merge(const Report& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

    bool passed() const {
        for (const auto& i : items)
            if (!i.passed) return false;
        return true;
    }
    const Item* find(const std::string& name) const {
        for (const auto& i : items)
            if (i.name == name) return &i;
        return nullptr;
    }
    /// First failing item or nullptr.
    const Item* first_failure() const {
        for (const auto& i : items)
            if (!i.passed) return &i;
        return nullptr;
    }
};

}  // namespace ainf
