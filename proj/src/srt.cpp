#include "vsum/srt.hpp"

#include <charconv>
#include <cstdio>

#include "vsum/errors.hpp"

namespace vsum {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::int64_t to_int(std::string_view s) {
    std::int64_t v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

std::string_view rstrip(std::string_view s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string_view strip(std::string_view s) {
    s = rstrip(s);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

// Splits into lines on '\n'; carriage returns are stripped per line.
std::vector<std::string_view> split_lines(std::string_view raw) {
    std::vector<std::string_view> lines;
    size_t pos = 0;
    while (pos <= raw.size()) {
        size_t nl = raw.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(rstrip(raw.substr(pos)));
            break;
        }
        lines.push_back(rstrip(raw.substr(pos, nl - pos)));
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

Timecode Timecode::parse(std::string_view text) {
    // HH:MM:SS,mmm — fixed widths, comma separator
    if (text.size() != 12 || text[2] != ':' || text[5] != ':' || text[8] != ',')
        throw MalformedTimecode("bad timecode: '" + std::string(text) + "'");
    std::string_view hh = text.substr(0, 2), mm = text.substr(3, 2);
    std::string_view ss = text.substr(6, 2), ms = text.substr(9, 3);
    if (!all_digits(hh) || !all_digits(mm) || !all_digits(ss) || !all_digits(ms))
        throw MalformedTimecode("non-digit in timecode: '" + std::string(text) + "'");
    std::int64_t m = to_int(mm), s = to_int(ss);
    if (m >= 60 || s >= 60)
        throw MalformedTimecode("minutes/seconds out of range: '" + std::string(text) + "'");
    return Timecode{((to_int(hh) * 60 + m) * 60 + s) * 1000 + to_int(ms)};
}

std::string Timecode::to_string() const {
    std::int64_t ms = millis;
    std::int64_t h = ms / 3600000;
    ms %= 3600000;
    std::int64_t m = ms / 60000;
    ms %= 60000;
    std::int64_t s = ms / 1000;
    ms %= 1000;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld,%03lld",
                  static_cast<long long>(h), static_cast<long long>(m),
                  static_cast<long long>(s), static_cast<long long>(ms));
    return buf;
}

const SubtitleCue* SubtitleTrack::find(int cue_id) const {
    for (const auto& c : cues)
        if (c.id == cue_id) return &c;
    return nullptr;
}

void SubtitleTrack::validate() const {
    int prev_id = 0;
    Timecode prev_start{-1};
    for (const auto& c : cues) {
        if (c.id <= prev_id)
            throw NonMonotonicIds("cue id " + std::to_string(c.id) + " after " + std::to_string(prev_id));
        if (c.start >= c.end)
            throw OverlapError("cue " + std::to_string(c.id) + ": start " + c.start.to_string() +
                               " >= end " + c.end.to_string());
        if (c.start < prev_start)
            throw NonMonotonicStarts("cue " + std::to_string(c.id) + " starts before its predecessor");
        if (c.start.millis < 0 || c.end.millis >= Timecode::kMaxMillis)
            throw MalformedTimecode("cue " + std::to_string(c.id) + " outside the representable range");
        if (strip(c.text).empty())
            throw ParseError("cue " + std::to_string(c.id) + " has blank text");
        if (c.text.find('\n') != std::string::npos)
            throw ParseError("cue " + std::to_string(c.id) + " text contains a line break");
        prev_id = c.id;
        prev_start = c.start;
    }
}

SubtitleTrack parse_srt(std::string_view raw) {
    if (raw.size() >= 3 && static_cast<unsigned char>(raw[0]) == 0xEF &&
        static_cast<unsigned char>(raw[1]) == 0xBB && static_cast<unsigned char>(raw[2]) == 0xBF)
        raw.remove_prefix(3);

    std::vector<std::string_view> lines = split_lines(raw);
    SubtitleTrack track;
    size_t i = 0;
    while (i < lines.size()) {
        while (i < lines.size() && strip(lines[i]).empty()) ++i;
        if (i >= lines.size()) break;

        std::string_view id_line = strip(lines[i]);
        if (!all_digits(id_line))
            throw ParseError("expected cue id at line " + std::to_string(i + 1) + ", got '" +
                             std::string(id_line) + "'");
        std::int64_t id = to_int(id_line);
        if (id <= 0) throw ParseError("cue id must be positive, got " + std::string(id_line));
        ++i;

        if (i >= lines.size())
            throw ParseError("record " + std::to_string(id) + " ends before its timecode line");
        std::string_view time_line = strip(lines[i]);
        size_t arrow = time_line.find(" --> ");
        if (arrow == std::string_view::npos)
            throw MalformedTimecode("record " + std::to_string(id) + ": missing ' --> ' separator");
        Timecode start = Timecode::parse(strip(time_line.substr(0, arrow)));
        Timecode end = Timecode::parse(strip(time_line.substr(arrow + 5)));
        ++i;

        std::string text;
        while (i < lines.size() && !strip(lines[i]).empty()) {
            if (!text.empty()) text += ' ';
            std::string_view piece = lines[i];
            text.append(piece.data(), piece.size());
            ++i;
        }
        std::string_view trimmed = strip(text);
        if (trimmed.empty())
            throw ParseError("record " + std::to_string(id) + " has no text");

        track.cues.push_back(SubtitleCue{static_cast<int>(id), start, end, std::string(trimmed)});
    }

    if (track.cues.empty()) throw EmptyTrack("no subtitle records found");
    track.validate();
    return track;
}

std::string serialize_srt(const SubtitleTrack& track) {
    if (track.cues.empty()) throw EmptyTrack("refusing to serialize an empty track");
    track.validate();
    std::string out;
    for (const auto& c : track.cues) {
        out += std::to_string(c.id);
        out += '\n';
        out += c.start.to_string();
        out += " --> ";
        out += c.end.to_string();
        out += '\n';
        out += c.text;
        out += "\n\n";
    }
    return out;
}

RenumberResult renumber(const SubtitleTrack& track) {
    RenumberResult result;
    result.track.cues.reserve(track.cues.size());
    result.original_ids.reserve(track.cues.size());
    int next = 1;
    for (const auto& c : track.cues) {
        result.original_ids.push_back(c.id);
        SubtitleCue copy = c;
        copy.id = next++;
        result.track.cues.push_back(std::move(copy));
    }
    return result;
}

}  // namespace vsum
