#ifndef ZVK_WORDS_HPP
#define ZVK_WORDS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace zvk {

// A freely reduced word in a free group. Letters are nonzero signed
// integers: i stands for the i-th generator, -i for its inverse. The
// empty word is the identity. Reduction happens on construction, so
// equality of words is equality of letter sequences.
class Word {
public:
    Word() = default;
    explicit Word(const std::vector<int>& raw) : letters_(freely_reduce(raw)) {}

    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    int max_index() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

    static std::vector<int> freely_reduce(const std::vector<int>& raw);

private:
    std::vector<int> letters_;
};

Word reduce(const std::vector<int>& raw);
Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);
Word power(const Word& a, int n);

// Images of the generators 1..arity; substitution extends them to a
// homomorphism of the free group.
struct Endomorphism {
    int arity = 0;
    std::vector<Word> images;  // images[i-1] = image of generator i

    static Endomorphism identity(int arity);
};

Word substitute(const Word& w, const Endomorphism& e);

std::string to_string(const Word& w);

}  // namespace zvk

#endif
