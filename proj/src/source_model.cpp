#include "jnismell/source_model.hpp"

#include <algorithm>
#include <set>

namespace jnismell {

Language language_from_extension(const std::string& path) {
    auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return Language::Other;
    std::string ext = path.substr(dot);
    if (ext == ".java") return Language::Java;
    if (ext == ".c" || ext == ".h") return Language::C;
    if (ext == ".cc" || ext == ".cpp" || ext == ".cxx" || ext == ".hpp")
        return Language::Cpp;
    return Language::Other;
}

const char* to_string(Language lang) {
    switch (lang) {
        case Language::Java: return "java";
        case Language::C: return "c";
        case Language::Cpp: return "cpp";
        default: return "other";
    }
}

int count_loc(const std::string& text) {
    int loc = 0;
    bool line_has_content = false;
    for (char c : text) {
        if (c == '\n') {
            if (line_has_content) ++loc;
            line_has_content = false;
        } else if (c != ' ' && c != '\t' && c != '\r') {
            line_has_content = true;
        }
    }
    if (line_has_content) ++loc;
    return loc;
}

std::string Diagnostic::format() const {
    return "WARN " + file_path + ":" + std::to_string(line) + " " + reason;
}

const std::vector<std::string>& id_lookup_apis() {
    static const std::vector<std::string> v = {
        "GetObjectClass", "FindClass",   "GetFieldID",
        "GetStaticFieldID", "GetMethodID", "GetStaticMethodID"};
    return v;
}

const std::vector<std::string>& unsafe_return_apis() {
    static const std::vector<std::string> v = {
        "FindClass", "GetFieldID", "GetStaticFieldID", "GetMethodID",
        "GetStaticMethodID"};
    return v;
}

const std::vector<std::string>& local_ref_creation_apis() {
    static const std::vector<std::string> v = {
        "GetObjectArrayElement", "NewLocalRef",        "AllocObject",
        "NewObject",             "NewObjectA",         "NewObjectV",
        "NewDirectByteBuffer",   "ToReflectedMethod",  "ToReflectedField"};
    return v;
}

const std::vector<std::string>& resource_acquisition_apis() {
    static const std::vector<std::string> v = {
        "GetStringChars",          "GetStringUTFChars",
        "GetBooleanArrayElements", "GetByteArrayElements",
        "GetCharArrayElements",    "GetShortArrayElements",
        "GetIntArrayElements",     "GetLongArrayElements",
        "GetFloatArrayElements",   "GetDoubleArrayElements",
        "GetPrimitiveArrayCritical", "GetStringCritical"};
    return v;
}

const std::vector<std::string>& field_get_apis() {
    static const std::vector<std::string> v = {
        "GetObjectField", "GetBooleanField", "GetByteField",
        "GetCharField",   "GetShortField",   "GetIntField",
        "GetLongField",   "GetFloatField",   "GetStaticObjectField"};
    return v;
}

const std::vector<std::string>& field_set_apis() {
    static const std::vector<std::string> v = {
        "SetObjectField", "SetBooleanField", "SetByteField",
        "SetCharField",   "SetShortField",   "SetIntField",
        "SetLongField",   "SetFloatField",   "SetStaticObjectField"};
    return v;
}

const std::vector<std::string>& cacheable_lookup_apis() {
    static const std::vector<std::string> v = {"GetFieldID", "GetMethodID",
                                               "GetStaticMethodID"};
    return v;
}

std::string release_api_for(const std::string& acquisition_api) {
    if (acquisition_api.rfind("Get", 0) == 0)
        return "Release" + acquisition_api.substr(3);
    return "";
}

const std::vector<std::string>& jni_vocabulary() {
    static const std::vector<std::string> v = [] {
        std::set<std::string> all;
        for (const auto* set :
             {&id_lookup_apis(), &unsafe_return_apis(), &local_ref_creation_apis(),
              &resource_acquisition_apis(), &field_get_apis(), &field_set_apis(),
              &cacheable_lookup_apis()}) {
            all.insert(set->begin(), set->end());
        }
        for (const auto& a : resource_acquisition_apis()) all.insert(release_api_for(a));
        for (const char* extra :
             {"DeleteLocalRef", "EnsureLocalCapacity", "NewGlobalRef",
              "NewWeakGlobalRef", "Throw", "ThrowNew", "ExceptionCheck",
              "ExceptionOccurred", "RegisterNatives", "DefineClass",
              "DeleteGlobalRef", "DeleteWeakGlobalRef", "ExceptionClear",
              "ExceptionDescribe", "GetArrayLength", "GetStringLength",
              "GetStringUTFLength", "GetStringRegion", "GetStringUTFRegion",
              "NewString", "NewStringUTF", "SetObjectArrayElement",
              "IsSameObject", "IsInstanceOf", "IsAssignableFrom",
              "GetSuperclass", "PushLocalFrame", "PopLocalFrame",
              "MonitorEnter", "MonitorExit", "GetJavaVM", "GetVersion",
              "GetDirectBufferAddress", "GetDirectBufferCapacity"}) {
            all.insert(extra);
        }
        for (const char* ret :
             {"Void", "Object", "Boolean", "Byte", "Char", "Short", "Int",
              "Long", "Float", "Double"}) {
            all.insert(std::string("Call") + ret + "Method");
            all.insert(std::string("CallStatic") + ret + "Method");
            all.insert(std::string("CallNonvirtual") + ret + "Method");
        }
        for (const char* elem :
             {"Boolean", "Byte", "Char", "Short", "Int", "Long", "Float",
              "Double", "Object"}) {
            all.insert(std::string("New") + elem + "Array");
            if (std::string(elem) != "Object") {
                all.insert(std::string("Get") + elem + "ArrayRegion");
                all.insert(std::string("Set") + elem + "ArrayRegion");
            }
        }
        return std::vector<std::string>(all.begin(), all.end());
    }();
    return v;
}

bool in_jni_vocabulary(const std::string& name) {
    const auto& v = jni_vocabulary();
    return std::binary_search(v.begin(), v.end(), name);
}

}  // namespace jnismell
