#pragma once

#include <string>

#include <dltzeta/io.hpp>

namespace fx {

inline std::string path(const std::string &name) { return std::string(DLTZ_FIXTURES) + "/" + name; }

inline dltz::Fan fan(const std::string &name) { return dltz::load_fan(path(name + ".json")); }

/// Ray index by label ("x", "1", ...).
inline int ray(const dltz::Fan &f, const std::string &label)
{
    int i = f.label_index(label);
    if (i < 0)
        throw std::runtime_error("no ray labelled " + label);
    return i;
}

inline dltz::ConeIdx cone(const dltz::Fan &f, std::initializer_list<const char *> labels)
{
    dltz::ConeIdx c;
    for (const char *l : labels)
        c.push_back(ray(f, l));
    std::sort(c.begin(), c.end());
    return c;
}

} // namespace fx

namespace fx {

inline dltz::Polynomial poly(const std::string &name = "f") { return dltz::load_polynomial(path(name + ".json")); }

} // namespace fx
