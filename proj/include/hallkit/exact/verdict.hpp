/**
 * @file verdict.hpp
 * @brief Pass/fail result carrying human-readable witnesses.
 */
#pragma once

#include <string>
#include <vector>

namespace hallkit {

struct Verdict {
    bool pass = true;
    std::vector<std::string> witnesses;

    void fail(std::string why)
    {
        pass = false;
        witnesses.push_back(std::move(why));
    }
    void absorb(const Verdict& other, const std::string& prefix = "")
    {
        if (!other.pass)
            pass = false;
        for (const auto& w : other.witnesses)
            witnesses.push_back(prefix + w);
    }
    explicit operator bool() const { return pass; }
};

} // namespace hallkit
