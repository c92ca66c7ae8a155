# JSON schemas of the records written in json output mode
