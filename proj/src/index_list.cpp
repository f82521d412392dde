#include "potts/index_list.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace potts {

IndexList::IndexList(std::initializer_list<int> sites) : IndexList(std::vector<int>(sites)) {}

IndexList::IndexList(std::vector<int> sites) : entries_(std::move(sites)) {
  for (int s : entries_) {
    if (s < 1) throw std::out_of_range("index list entry " + std::to_string(s) + " is not >= 1");
    ++counts_[s];
  }
}

int IndexList::multiplicity(int site) const {
  auto it = counts_.find(site);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<int> IndexList::support() const {
  std::vector<int> out;
  for (auto [site, count] : counts_) out.push_back(site);
  return out;
}

std::vector<int> IndexList::odd_sites() const {
  std::vector<int> out;
  for (auto [site, count] : counts_)
    if (count % 2 == 1) out.push_back(site);
  return out;
}

std::vector<int> IndexList::even_sites() const {
  std::vector<int> out;
  for (auto [site, count] : counts_)
    if (count % 2 == 0) out.push_back(site);
  return out;
}

bool IndexList::has_odd_group() const {
  return std::any_of(counts_.begin(), counts_.end(), [](auto kv) { return kv.second % 2 == 1; });
}

int IndexList::max_site() const noexcept { return counts_.empty() ? 0 : counts_.rbegin()->first; }

void IndexList::require_within(int n) const {
  if (max_site() > n)
    throw std::out_of_range("index list " + to_string() + " refers to site " +
                            std::to_string(max_site()) + " but n=" + std::to_string(n));
}

std::string IndexList::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + "]";
}

IndexList concat(const IndexList& r, const IndexList& s) {
  std::vector<int> all = r.entries();
  all.insert(all.end(), s.entries().begin(), s.entries().end());
  return IndexList(std::move(all));
}

IndexList parse_index_list(std::string_view text) {
  std::vector<int> sites;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return IndexList();
  if (text[pos] == '[' && text.back() == ']') {
    text = text.substr(pos + 1, text.size() - pos - 2);
    pos = 0;
    skip_ws();
    if (pos == text.size()) return IndexList();
  }
  while (true) {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc())
      throw std::invalid_argument("malformed index list '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    sites.push_back(value);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw std::invalid_argument("malformed index list '" + std::string(text) + "'");
    ++pos;
  }
  return IndexList(std::move(sites));
}

}  // namespace potts
