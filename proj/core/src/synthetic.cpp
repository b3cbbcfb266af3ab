#include "hlgt/synthetic.hpp"

#include <set>
#include <stdexcept>

#include "hlgt/rng.hpp"

namespace hlgt {

namespace {

const std::vector<std::string> kModifiers = {"school", "city", "village", "town"};
const std::vector<std::string> kPlaces = {"farm", "shop", "team", "factory", "library", "store"};
const std::vector<std::string> kPeople = {"baker", "farmer", "worker", "driver", "tailor",
                                          "painter"};
const std::vector<std::string> kObjects = {"goods",   "books", "bricks", "bottles",
                                           "toys",    "cakes", "shirts", "flowers"};
const std::vector<std::string> kUnits = {"tons", "kg", "bags", "liters", "crates", "meters"};
const std::vector<std::string> kVerbs2 = {"sold", "used", "moved", "delivered"};
const std::vector<std::string> kFractions = {"1/2", "1/3", "2/3", "1/4", "3/4",
                                             "2/5", "3/5", "1/5", "5/6", "3/8"};
const std::vector<std::string> kPercents = {"5%",  "10%", "15%", "20%", "25%", "30%",
                                            "35%", "40%", "45%", "50%", "60%", "75%"};

const std::string& pick(Rng& rng, const std::vector<std::string>& pool) {
    return pool[static_cast<std::size_t>(rng.next_below(pool.size()))];
}

struct Builder {
    RawProblem p;

    void tok(const std::string& word, const std::string& tag) {
        p.tokens.push_back(word);
        p.pos_tags.push_back(tag);
    }
    long pos() const { return static_cast<long>(p.tokens.size()); }
    void frame(long root, std::vector<SrlArg> args) {
        p.frames.push_back({root, std::move(args)});
    }
};

// "the M A had X U of B , it V2 Y U , how many U of B remain ?"  ->  N0 - N1
RawProblem make_transfer(Rng& rng) {
    Builder b;
    const auto& m = pick(rng, kModifiers);
    const auto& a = pick(rng, kPlaces);
    const auto& obj = pick(rng, kObjects);
    const auto& unit = pick(rng, kUnits);
    const auto& v2 = pick(rng, kVerbs2);
    long x = rng.next_int(20, 99);
    long y = rng.next_int(2, x - 1);

    b.tok("the", "DET");
    b.tok(m, "NOUN");
    b.tok(a, "NOUN");
    long root1 = b.pos();
    b.tok("had", "VERB");
    b.tok(std::to_string(x), "NUM");
    b.tok(unit, "NOUN");
    b.tok("of", "ADP");
    b.tok(obj, "NOUN");
    b.tok(",", "PUNCT");
    b.tok("it", "PRON");
    long root2 = b.pos();
    b.tok(v2, "VERB");
    b.tok(std::to_string(y), "NUM");
    b.tok(unit, "NOUN");
    b.tok(",", "PUNCT");
    b.tok("how", "ADV");
    b.tok("many", "ADJ");
    b.tok(unit, "NOUN");
    b.tok("of", "ADP");
    b.tok(obj, "NOUN");
    b.tok("remain", "VERB");
    b.tok("?", "PUNCT");

    b.frame(root1, {{SrlLabel::Arg0, 0, 3}, {SrlLabel::Arg1, 4, 8}});
    b.frame(root2, {{SrlLabel::Arg0, 9, 10}, {SrlLabel::Arg1, 11, 13}});
    b.p.units = {{0, 5}, {1, 12}};
    b.p.equation = "N0-N1";
    b.p.answer = (Rational(x) - Rational(y)).to_string();
    return b.p;
}

// "each B costs X yuan , the A bought Y B , how much money is needed ?" -> N0 * N1
RawProblem make_price(Rng& rng) {
    Builder b;
    const auto& a = pick(rng, kPlaces);
    const auto& obj = pick(rng, kObjects);
    long x = rng.next_int(2, 20);
    long y = rng.next_int(2, 20);

    b.tok("each", "DET");
    b.tok(obj, "NOUN");
    long root1 = b.pos();
    b.tok("costs", "VERB");
    b.tok(std::to_string(x), "NUM");
    b.tok("yuan", "NOUN");
    b.tok(",", "PUNCT");
    b.tok("the", "DET");
    b.tok(a, "NOUN");
    long root2 = b.pos();
    b.tok("bought", "VERB");
    b.tok(std::to_string(y), "NUM");
    b.tok(obj, "NOUN");
    b.tok(",", "PUNCT");
    b.tok("how", "ADV");
    b.tok("much", "ADJ");
    b.tok("money", "NOUN");
    b.tok("is", "VERB");
    b.tok("needed", "VERB");
    b.tok("?", "PUNCT");

    b.frame(root1, {{SrlLabel::Arg0, 0, 2}, {SrlLabel::Arg1, 3, 5}});
    b.frame(root2, {{SrlLabel::Arg0, 6, 8}, {SrlLabel::Arg1, 9, 11}});
    b.p.units = {{0, 4}, {1, 10}};
    b.p.equation = "N0*N1";
    b.p.answer = (Rational(x) * Rational(y)).to_string();
    return b.p;
}

// "the tank holds X liters of water , F of the water was used , ..." -> N0 * N1
RawProblem make_fraction(Rng& rng) {
    Builder b;
    const auto& frac = pick(rng, kFractions);
    long x = rng.next_int(10, 90);

    b.tok("the", "DET");
    b.tok("tank", "NOUN");
    long root1 = b.pos();
    b.tok("holds", "VERB");
    b.tok(std::to_string(x), "NUM");
    b.tok("liters", "NOUN");
    b.tok("of", "ADP");
    b.tok("water", "NOUN");
    b.tok(",", "PUNCT");
    b.tok(frac, "NUM");
    b.tok("of", "ADP");
    b.tok("the", "DET");
    b.tok("water", "NOUN");
    b.tok("was", "VERB");
    long root2 = b.pos();
    b.tok("used", "VERB");
    b.tok(",", "PUNCT");
    b.tok("how", "ADV");
    b.tok("many", "ADJ");
    b.tok("liters", "NOUN");
    b.tok("were", "VERB");
    b.tok("used", "VERB");
    b.tok("?", "PUNCT");

    b.frame(root1, {{SrlLabel::Arg0, 0, 2}, {SrlLabel::Arg1, 3, 7}});
    b.frame(root2, {{SrlLabel::Arg1, 8, 12}});
    b.p.units = {{0, 4}};
    b.p.equation = "N0*N1";
    b.p.answer = (Rational(x) * Rational::parse(frac)).to_string();
    return b.p;
}

// "a B costs X yuan , the price drops by P , what is the new price ?" -> N0 * (1 - N1)
RawProblem make_discount(Rng& rng) {
    Builder b;
    const auto& obj = pick(rng, kObjects);
    const auto& pct = pick(rng, kPercents);
    long x = rng.next_int(10, 400);

    b.tok("a", "DET");
    b.tok(obj, "NOUN");
    long root1 = b.pos();
    b.tok("costs", "VERB");
    b.tok(std::to_string(x), "NUM");
    b.tok("yuan", "NOUN");
    b.tok(",", "PUNCT");
    b.tok("the", "DET");
    b.tok("price", "NOUN");
    long root2 = b.pos();
    b.tok("drops", "VERB");
    b.tok("by", "ADP");
    b.tok(pct, "NUM");
    b.tok(",", "PUNCT");
    b.tok("what", "PRON");
    b.tok("is", "VERB");
    b.tok("the", "DET");
    b.tok("new", "ADJ");
    b.tok("price", "NOUN");
    b.tok("?", "PUNCT");

    b.frame(root1, {{SrlLabel::Arg0, 0, 2}, {SrlLabel::Arg1, 3, 5}});
    b.frame(root2, {{SrlLabel::Arg0, 6, 8}, {SrlLabel::ArgM, 9, 11}});
    b.p.units = {{0, 4}};
    b.p.equation = "N0*(1-N1)";
    b.p.answer = (Rational(x) * (Rational(1) - Rational::parse(pct))).to_string();
    return b.p;
}

// "the bank pays R percent interest , a customer deposits X yuan in the
// morning , ..." -> N1 * N0 / 100
RawProblem make_interest(Rng& rng) {
    Builder b;
    long r = rng.next_int(1, 20);
    long x = rng.next_int(50, 999);

    b.tok("the", "DET");
    b.tok("bank", "NOUN");
    long root1 = b.pos();
    b.tok("pays", "VERB");
    b.tok(std::to_string(r), "NUM");
    b.tok("percent", "NOUN");
    b.tok("interest", "NOUN");
    b.tok(",", "PUNCT");
    b.tok("a", "DET");
    b.tok("customer", "NOUN");
    long root2 = b.pos();
    b.tok("deposits", "VERB");
    b.tok(std::to_string(x), "NUM");
    b.tok("yuan", "NOUN");
    b.tok("in", "ADP");
    b.tok("the", "DET");
    b.tok("morning", "NOUN");
    b.tok(",", "PUNCT");
    b.tok("how", "ADV");
    b.tok("much", "ADJ");
    b.tok("interest", "NOUN");
    b.tok("is", "VERB");
    b.tok("paid", "VERB");
    b.tok("?", "PUNCT");

    b.frame(root1, {{SrlLabel::Arg0, 0, 2}, {SrlLabel::Arg1, 3, 6}});
    b.frame(root2,
            {{SrlLabel::Arg0, 7, 9}, {SrlLabel::Arg1, 10, 12}, {SrlLabel::ArgM, 12, 15}});
    b.p.units = {{1, 11}};
    b.p.equation = "N1*N0/100";
    b.p.answer = (Rational(x) * Rational(r) / Rational(100)).to_string();
    return b.p;
}

// "the A1 made X B , the A2 made Y B , how many more B did the winner make ?"
// -> larger minus smaller; statement order is random so the gold tree depends
// on the comparison
RawProblem make_compare(Rng& rng) {
    Builder b;
    std::size_t i1 = static_cast<std::size_t>(rng.next_below(kPeople.size()));
    std::size_t i2 = static_cast<std::size_t>(rng.next_below(kPeople.size() - 1));
    if (i2 >= i1) ++i2;
    const auto& a1 = kPeople[i1];
    const auto& a2 = kPeople[i2];
    const auto& obj = pick(rng, kObjects);
    long x = rng.next_int(5, 99);
    long y = rng.next_int(5, 98);
    if (y >= x) ++y;  // distinct values

    b.tok("the", "DET");
    b.tok(a1, "NOUN");
    long root1 = b.pos();
    b.tok("made", "VERB");
    b.tok(std::to_string(x), "NUM");
    b.tok(obj, "NOUN");
    b.tok(",", "PUNCT");
    b.tok("the", "DET");
    b.tok(a2, "NOUN");
    long root2 = b.pos();
    b.tok("made", "VERB");
    b.tok(std::to_string(y), "NUM");
    b.tok(obj, "NOUN");
    b.tok(",", "PUNCT");
    b.tok("how", "ADV");
    b.tok("many", "ADJ");
    b.tok("more", "ADJ");
    b.tok(obj, "NOUN");
    b.tok("did", "VERB");
    b.tok("the", "DET");
    b.tok("winner", "NOUN");
    b.tok("make", "VERB");
    b.tok("?", "PUNCT");

    b.frame(root1, {{SrlLabel::Arg0, 0, 2}, {SrlLabel::Arg1, 3, 5}});
    b.frame(root2, {{SrlLabel::Arg0, 6, 8}, {SrlLabel::Arg1, 9, 11}});
    b.p.units = {{0, 4}, {1, 10}};
    b.p.equation = x > y ? "N0-N1" : "N1-N0";
    b.p.answer = Rational(x > y ? x - y : y - x).to_string();
    return b.p;
}

using TemplateFn = RawProblem (*)(Rng&);
constexpr TemplateFn kTemplates[] = {make_transfer, make_price,    make_fraction,
                                     make_discount, make_interest, make_compare};
constexpr int kTemplateCount = 6;

std::string token_key(const RawProblem& p) {
    std::string key;
    for (const auto& t : p.tokens) {
        key += t;
        key += '\x1f';
    }
    return key;
}

}  // namespace

std::vector<RawProblem> generate_synthetic(std::uint64_t seed, long count) {
    if (count < 1) throw std::invalid_argument("generate_synthetic: count must be >= 1");
    Rng rng(seed);
    std::vector<RawProblem> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        RawProblem p = kTemplates[i % kTemplateCount](rng);
        p.id = "syn-" + std::to_string(seed) + "-" + std::to_string(i);
        out.push_back(std::move(p));
    }
    return out;
}

SyntheticSplit generate_synthetic_split(std::uint64_t seed, long train_count, long test_count) {
    SyntheticSplit split;
    std::set<std::string> seen;
    Rng rng(seed);
    long made = 0;
    long want = train_count + test_count;
    long attempts = 0;
    while (made < want) {
        if (++attempts > want * 50) {
            throw std::runtime_error("generate_synthetic_split: template space exhausted");
        }
        RawProblem p = kTemplates[made % kTemplateCount](rng);
        if (!seen.insert(token_key(p)).second) continue;
        p.id = "syn-" + std::to_string(seed) + "-" + std::to_string(made);
        if (made < train_count) {
            split.train.push_back(std::move(p));
        } else {
            split.test.push_back(std::move(p));
        }
        ++made;
    }
    return split;
}

}  // namespace hlgt
