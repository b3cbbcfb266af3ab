#include "hlgt/vocab.hpp"

#include <algorithm>
#include <set>

namespace hlgt {

Vocab::Vocab() {
    add("<unk>");
    add(kNumToken);
}

void Vocab::add(const std::string& word) {
    if (index_.contains(word)) return;
    index_[word] = static_cast<long>(words_.size());
    words_.push_back(word);
}

long Vocab::id_of(const std::string& word) const {
    auto it = index_.find(word);
    return it == index_.end() ? kUnkId : it->second;
}

Vocab Vocab::build(const std::vector<Problem>& problems) {
    // collect in sorted order so the vocabulary does not depend on problem order
    std::set<std::string> words;
    for (const auto& p : problems) {
        for (const auto& t : p.tokens) words.insert(t);
    }
    Vocab v;
    for (const auto& w : words) v.add(w);
    return v;
}

}  // namespace hlgt
