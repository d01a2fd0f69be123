// io.hpp - the four line-based instance formats, parse and serialize
//
// Every format opens with a versioned magic line. Serialization is canonical
// (vertices ascending, edges lexicographic, tables base-major) so parse then
// serialize round-trips byte-identically on normalized files.
#ifndef KAKIMIZU_IO_HPP
#define KAKIMIZU_IO_HPP

#include "kakimizu/cover_model.hpp"
#include "kakimizu/group_action.hpp"
#include "kakimizu/projection.hpp"

namespace kakimizu {

enum class FileKind { flag_complex, height_family, action, proj_table };

// Decides by the magic line alone; unknown magic throws input_error.
FileKind sniff_kind(const std::string& path);

FlagComplex parse_flag_complex(const std::string& path);
FlagComplex parse_flag_complex_text(const std::string& text, const std::string& name);
std::string serialize_flag_complex(const FlagComplex& c);

// Member lines must be normalized and in strictly increasing lexicographic
// order; violations are input errors with a fix-it hint.
HeightFamily parse_height_family(const std::string& path);
HeightFamily parse_height_family_text(const std::string& text, const std::string& name);
std::string serialize_height_family(const HeightFamily& fam);

GroupAction parse_action(const std::string& path);
GroupAction parse_action_text(const std::string& text, const std::string& name);
std::string serialize_action(const GroupAction& a);

// proj and ord lines must be exhaustive; missing or duplicate entries are
// parse errors, there are no defaults.
ProjectionStructure parse_projection_table(const std::string& path);
ProjectionStructure parse_projection_table_text(const std::string& text,
                                                const std::string& name);
std::string serialize_projection_table(const ProjectionStructure& ps);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace kakimizu

#endif
