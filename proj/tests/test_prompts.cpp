#include "doctest.h"

#include "dra/errors.hpp"
#include "dra/llm/prompts.hpp"
#include "test_support.hpp"

#include <fstream>

using namespace dra;

TEST_CASE("builtin templates cover the four interaction kinds") {
    const PromptLibrary lib = PromptLibrary::builtin();
    for (const char* name : {"split_gate", "decompose_topic", "uniqueness_gate", "write_section"}) {
        CHECK_FALSE(lib.text(name).empty());
    }
    CHECK_THROWS_AS(lib.text("nonexistent"), ConfigError);
}

TEST_CASE("shipped prompt files stay in sync with the builtin copies") {
#ifdef PROMPTS_DIR
    const std::filesystem::path dir(PROMPTS_DIR);
    const PromptLibrary builtin = PromptLibrary::builtin();
    REQUIRE(std::filesystem::is_directory(dir));
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".txt") {
            continue;
        }
        ++files;
        const std::string name = entry.path().stem().string();
        CAPTURE(name);
        CHECK(dra::test::read_file(entry.path()) == builtin.text(name));
    }
    CHECK(files == builtin.all().size());
#else
    FAIL("PROMPTS_DIR not defined for this build");
#endif
}

TEST_CASE("from_dir overlays files on the builtin set") {
    dra::test::TempDir dir("prompts");
    std::ofstream(dir.path() / "split_gate.txt") << "custom split prompt {topic}";
    std::ofstream(dir.path() / "extra.txt") << "an extra template";
    std::ofstream(dir.path() / "ignored.md") << "not a template";

    const PromptLibrary lib = PromptLibrary::from_dir(dir.path());
    CHECK(lib.text("split_gate") == "custom split prompt {topic}");
    CHECK(lib.text("extra") == "an extra template");
    // Untouched names keep the builtin text.
    CHECK(lib.text("write_section") == PromptLibrary::builtin().text("write_section"));
    CHECK_THROWS_AS(lib.text("ignored"), ConfigError);

    CHECK_THROWS_AS(PromptLibrary::from_dir(dir.path() / "missing"), ConfigError);
}

TEST_CASE("render substitutes every occurrence of each placeholder") {
    dra::test::TempDir dir("render");
    std::ofstream(dir.path() / "demo.txt") << "{a} and {b} then {a} again; {unset} stays";
    const PromptLibrary lib = PromptLibrary::from_dir(dir.path());
    const std::string rendered = lib.render("demo", {{"a", "1"}, {"b", "2"}});
    CHECK(rendered == "1 and 2 then 1 again; {unset} stays");
}

TEST_CASE("render leaves literal json braces in the builtin templates intact") {
    const PromptLibrary lib = PromptLibrary::builtin();
    const std::string rendered = lib.render("split_gate", {{"topic", "X"}});
    CHECK(rendered.find("X") != std::string::npos);
    CHECK(rendered.find("{topic}") == std::string::npos);
    CHECK(rendered.find("\"splittable\"") != std::string::npos);
}
