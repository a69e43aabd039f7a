#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "dinner/bounds.hpp"
#include "dinner/model.hpp"

namespace dinner {

enum class ParseErrorKind {
    Syntax,        // not JSON at all
    MissingField,  // required key absent
    InvalidValue,  // wrong type, extra key, unsorted or duplicate ids, non-positive parameter
    IdOutOfRange,  // id outside 1..s or 1..c
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ParseErrorKind kind() const { return kind_; }

private:
    ParseErrorKind kind_;
};

// Canonical interchange text:
//   {"instance":{"t":..,"s":..,"c":..,"sigma":..,"gamma":..},
//    "dinners":[[{"suppliers":[..],"customers":[..]}, ..], ..]}
// Compact, key order as shown, id arrays sorted ascending.
std::string encode_schedule(const Schedule& sched);
Schedule decode_schedule(std::string_view text);

// {"name":..,"suppliers":..,"groups":..,"grid":[[[ids..], ..], ..]}
std::string encode_template(const ScheduleTemplate& tpl);
ScheduleTemplate decode_template(std::string_view text);

// One object with every BoundsReport field; not-applicable values are null.
std::string encode_bounds(const BoundsReport& report);
BoundsReport decode_bounds(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace dinner
