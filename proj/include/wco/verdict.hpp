#pragma once

#include <map>
#include <optional>
#include <string>

namespace wco {

enum class Status { holds, fails, inconclusive };

struct Witness {
    std::string point;
    std::map<std::string, double> values;  // offending quantities by name
};

// Outcome of a property check. A failing verdict carries a witness; a holding
// verdict for a "for some c in (0,inf)" criterion carries the constant found.
struct Verdict {
    Status status = Status::inconclusive;
    std::optional<Witness> witness;
    std::optional<double> constant;
    std::string details;

    bool holds() const { return status == Status::holds; }
    bool fails() const { return status == Status::fails; }

    static Verdict yes(std::string details = {}) {
        return Verdict{Status::holds, std::nullopt, std::nullopt, std::move(details)};
    }
    static Verdict yes_with(double c, std::string details = {}) {
        return Verdict{Status::holds, std::nullopt, c, std::move(details)};
    }
    static Verdict no(Witness w, std::string details = {}) {
        return Verdict{Status::fails, std::move(w), std::nullopt, std::move(details)};
    }
    static Verdict unknown(std::string details = {}) {
        return Verdict{Status::inconclusive, std::nullopt, std::nullopt, std::move(details)};
    }
};

const char* status_name(Status s);

}  // namespace wco
