#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace telesum {

// Ordered list of variable names shared by all polynomials in one computation.
// Cheap to copy; equality is by content.
class VarSet {
public:
    VarSet() : names_(empty_()) {}
    explicit VarSet(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    int index(const std::string& v) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == v) return static_cast<int>(i);
        return -1;
    }

    int index_checked(const std::string& v) const {
        int i = index(v);
        if (i < 0) throw std::invalid_argument("unknown variable: " + v);
        return i;
    }

    bool operator==(const VarSet& o) const {
        return names_ == o.names_ || *names_ == *o.names_;
    }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

private:
    static std::shared_ptr<const std::vector<std::string>> empty_() {
        static auto e = std::make_shared<const std::vector<std::string>>();
        return e;
    }
    std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace telesum
