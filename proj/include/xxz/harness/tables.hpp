#pragma once

#include "xxz/algebra/rational.hpp"
#include "xxz/harness/suites.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xxz {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// "3..13", "3,5,7" or "4".
std::vector<int> parse_int_list(const std::string& text);

const std::vector<std::string>& table_families();
// efp-* families: exact closed-form values by N, k (all k if ks is empty).
// t-ratio-*: the t-factorial ratio at the given t. counts-*: values by N or n.
// thermo: values by k.
Table make_table(const std::string& family, const std::vector<int>& Ns, const std::vector<int>& ks,
                 const std::optional<Rational>& t = std::nullopt);

// CSV columns family,n,k,value; family in {asm, aht, csscpp, lgv}.
Table counts_table(const std::string& family, const std::vector<int>& ns, const std::vector<int>& ks);

std::string render_table(const Table& t, OutputFormat f);

}  // namespace xxz
