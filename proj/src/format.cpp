// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#include "fapchan/format.hpp"

#include <charconv>

namespace fapchan {

std::string sci17(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

std::string compact(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general);
    return std::string(buf, res.ptr);
}

} // namespace fapchan
