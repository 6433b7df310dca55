#pragma once

#include <iosfwd>
#include <string>

#include "mwav/model.hpp"

namespace mwav {

// Line-oriented text format, UTF-8, '#' comments. All numbers are exact
// rationals written as "p" or "p/q". Candidates are referred to by name:
//
//   mwav-instance 1
//   candidates 4
//   voters 3
//   committee 2
//   names a b c d          # optional; defaults to a, b, c, ...
//   priority b a c d
//   voter 0
//   pref a b c d
//   util 4 3 2 1           # by candidate id (the 'names' order), not by pref
//   owa 1 0
//   voter 1
//   ...
//
// Parsing validates every model invariant and reports the offending line.
// serialize/parse round-trips losslessly.

ElectionInstance parse_instance(std::istream& in);
ElectionInstance load_instance(const std::string& path);

std::string serialize_instance(const ElectionInstance& instance);
void save_instance(const ElectionInstance& instance, const std::string& path);

// "a,b;;c" -> three ballots {a,b}, {}, {c}. '-' also denotes an empty ballot.
BallotProfile parse_profile(const ElectionInstance& instance, const std::string& text);
std::string profile_to_string(const ElectionInstance& instance, const BallotProfile& profile);

}  // namespace mwav
