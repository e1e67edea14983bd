#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gmr/errors.hpp"

namespace gmr {

// A letter is an index into its alphabet. Listing order doubles as the
// precedence: index 0 is the largest letter.
using Letter = std::int32_t;

class Alphabet {
public:
    Alphabet() : d_(empty_data()) {}

    // `involution` pairs letter names; it must be fixpoint-free and its own
    // inverse.
    explicit Alphabet(std::vector<std::string> letters,
                      const std::vector<std::pair<std::string, std::string>>& involution = {}) {
        auto d = std::make_shared<Data>();
        d->names = std::move(letters);
        d->inverse.assign(d->names.size(), -1);
        for (std::size_t i = 0; i < d->names.size(); ++i) {
            if (d->names[i].empty())
                throw error("alphabet: empty letter name");
            if (!d->index.emplace(d->names[i], static_cast<Letter>(i)).second)
                throw error("alphabet: duplicate letter '" + d->names[i] + "'");
        }
        for (const auto& [x, y] : involution) {
            auto ix = d->index.find(x);
            auto iy = d->index.find(y);
            if (ix == d->index.end() || iy == d->index.end())
                throw error("alphabet: involution mentions unknown letter");
            if (ix->second == iy->second)
                throw error("alphabet: involution must not fix a letter");
            d->inverse[ix->second] = iy->second;
            d->inverse[iy->second] = ix->second;
        }
        bool any = false, all = !d->inverse.empty();
        for (Letter v : d->inverse) { if (v >= 0) any = true; else all = false; }
        d->has_involution = any && all;
        if (any && !all)
            throw error("alphabet: involution must cover every letter or none");
        d_ = std::move(d);
    }

    std::size_t size() const { return d_->names.size(); }
    const std::string& name(Letter a) const { return d_->names.at(static_cast<std::size_t>(a)); }

    std::optional<Letter> find(std::string_view s) const {
        auto it = d_->index.find(std::string(s));
        if (it == d_->index.end()) return std::nullopt;
        return it->second;
    }

    bool has_involution() const { return d_->has_involution; }

    Letter inverse_letter(Letter a) const {
        Letter r = d_->inverse.at(static_cast<std::size_t>(a));
        if (r < 0) throw error("alphabet: no involution defined");
        return r;
    }

    // Alphabets are compared by identity; distinct objects are distinct
    // alphabets even when they list the same letters.
    bool same(const Alphabet& o) const { return d_ == o.d_; }

private:
    struct Data {
        std::vector<std::string> names;
        std::vector<Letter> inverse; // -1 where undefined
        std::unordered_map<std::string, Letter> index;
        bool has_involution = false;
    };

    static std::shared_ptr<const Data> empty_data() {
        static const auto d = std::make_shared<Data>();
        return d;
    }

    std::shared_ptr<const Data> d_;
};

} // namespace gmr
