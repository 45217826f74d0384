#ifndef BHC_VERDICT_HPP
#define BHC_VERDICT_HPP

#include <string>

namespace bhc {

/// Three-valued answer; Undetermined means a hypothesis of every available
/// theorem fails, not that the answer is unknown in principle.
enum class Verdict
{
    Yes,
    No,
    Undetermined,
};

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes:
        return "yes";
    case Verdict::No:
        return "no";
    case Verdict::Undetermined:
        return "undetermined";
    }
    return "?";
}

inline Verdict verdict_of(bool b) { return b ? Verdict::Yes : Verdict::No; }

/// A verdict together with the reason or theorem it rests on.
struct Judgement
{
    Verdict verdict = Verdict::Undetermined;
    std::string reason;

    bool yes() const { return verdict == Verdict::Yes; }
    bool no() const { return verdict == Verdict::No; }
};

} // namespace bhc

#endif // BHC_VERDICT_HPP
