// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#ifndef FAPCHAN_FORMAT_HPP
#define FAPCHAN_FORMAT_HPP

#include <string>

namespace fapchan {

// Scientific notation with 17 significant digits: every double round-trips
// exactly, the output is locale-independent and bit-for-bit reproducible.
std::string sci17(double x);

// Shortest representation that round-trips the value ("40", "0.25", "inf");
// locale-independent.  Used in human-readable reports.
std::string compact(double x);

} // namespace fapchan

#endif // FAPCHAN_FORMAT_HPP
