#ifndef CLST_PORTER_HPP
#define CLST_PORTER_HPP

#include <string>
#include <string_view>

namespace clst {

// Porter suffix-stripping stemmer, original 1980 rule tables.
// Expects a lowercase word; words of length <= 2 are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace clst

#endif
