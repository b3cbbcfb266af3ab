#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hlgt/problem.hpp"

namespace hlgt {

/// Token vocabulary. Index 0 is the shared UNK embedding; NUM is always present.
class Vocab {
  public:
    static constexpr long kUnkId = 0;

    Vocab();
    static Vocab build(const std::vector<Problem>& problems);

    long size() const { return static_cast<long>(words_.size()); }
    long id_of(const std::string& word) const;
    const std::string& word_of(long id) const { return words_[static_cast<std::size_t>(id)]; }
    const std::vector<std::string>& words() const { return words_; }

    void add(const std::string& word);

  private:
    std::vector<std::string> words_;
    std::unordered_map<std::string, long> index_;
};

}  // namespace hlgt
