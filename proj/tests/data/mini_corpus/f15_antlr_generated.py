# $ANTLR 3.5.2 ExprParser.g 2019-08-01 12:33:41

# token type: INTEGER maps to the lexer rule for digits
