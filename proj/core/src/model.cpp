#include "sentmark/model.hpp"

namespace sentmark {

std::string render_prompt(const std::string& prompt_template, const std::string& original) {
    std::string out = prompt_template;
    const std::string placeholder = "{text}";
    auto pos = out.find(placeholder);
    if (pos == std::string::npos) return out + "\n" + original;
    out.replace(pos, placeholder.size(), original);
    return out;
}

namespace prompts {

const char* kParaphrase =
    "Human: Paraphrase the text below.\n"
    "{text}\n"
    "Assistant: Paraphrased Text:\n";

const char* kTranslateAttack =
    "[[INST]] <<SYS>> Translate the provided piece of text to {language}. Do not\n"
    "include any other sentences after the response, such as explanations of the\n"
    "translation.\n"
    "<</SYS>>\n"
    "\n"
    "{text} [/INST]\n"
    "\n"
    "Here is a translated version of the text:\n";

const char* kParaphraseAttack =
    "[[INST]] <<SYS>> Paraphrase the user provided text while preserving semantic\n"
    "similarity. Do not include any other sentences in the response, such as explanations\n"
    "of the paraphrasing. Do not summarize.\n"
    "<</SYS>>\n"
    "\n"
    "{text} [/INST]\n"
    "\n"
    "Here is a paraphrased version of the text:\n";

const char* kStealthJudge =
    "I have two classes of text, C1 and C2, which have some intrinsic difference.\n"
    "I will provide you with lists of texts from both classes. Can you help me\n"
    "classify which class a new text is in? You answer should only contain one word,\n"
    "[C1] or [C2].\n"
    "C1 texts:\n"
    "{class0}\n"
    "\n"
    "C2 texts:\n"
    "{class1}\n"
    "\n"
    "New text:\n"
    "{candidate}\n"
    "\n"
    "Please answer C1 or C2.\n";

} // namespace prompts

} // namespace sentmark
